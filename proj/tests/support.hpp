#pragma once

#include <string>

#include "intcay/groups.hpp"

namespace testing {

inline intcay::GMultiset ms(const intcay::GroupSpec& spec, const std::string& text) {
    return intcay::parse_multiset(spec, text);
}

inline intcay::GMultiset ms(const char* group, const std::string& text) {
    return ms(intcay::GroupSpec::parse(group), text);
}

inline std::string data_file(const std::string& name) { return std::string(INTCAY_DATA_DIR) + "/" + name; }

}  // namespace testing
