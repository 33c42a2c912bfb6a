#include "pdnrel/field.hpp"

namespace pdnrel {

double PowerMap::total_power() const {
    double sum = 0.0;
    for (double d : density.v) sum += d;
    return sum * dx * dy;
}

double total_power(const PowerStack& maps) {
    double sum = 0.0;
    for (const auto& m : maps) sum += m.total_power();
    return sum;
}

}  // namespace pdnrel
