#include "yangian/check.hpp"

namespace yang {

void CheckReport::add(CheckReport part) {
    instances += part.instances;
    if (!part.pass) {
        if (pass) witness = part.id + ": " + part.witness;
        pass = false;
    }
    parts.push_back(std::move(part));
}

}  // namespace yang
