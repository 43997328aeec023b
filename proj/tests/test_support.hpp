#pragma once

#include <srgh/json_io.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace srgh::testing {

/** Frozen expected values shared by the test binaries, parsed once. */
inline const Json& fixtures() {
    static const Json data = [] {
        std::ifstream in(std::string(SRGH_FIXTURES_DIR) + "/expected.json");
        if (!in) throw std::runtime_error("cannot open tests/fixtures/expected.json");
        return Json::parse(in);
    }();
    return data;
}

inline BigRational rat(const std::string& s) { return rational_from_string(s); }

inline std::vector<BigRational> rat_list(const Json& j) {
    std::vector<BigRational> out;
    for (const auto& item : j) out.push_back(rational_from_string(item.get<std::string>()));
    return out;
}

inline RatPoly poly_from_fixture(const Json& j) { return poly_from_json(j); }

}  // namespace srgh::testing
