#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqc/quantum.hpp"

namespace aqc {

// One line of a table fixture:
//   q n | type | C spec | D spec | [[n,k,dz/dx]]_q | labels | lp | matrix_file
// The last three columns are optional. type is CC, ACC, GC, AH, BC or SO; a
// leading '!' marks a row whose printed parameters are known to disagree with
// its printed generators.
struct FixtureRow {
    std::string file;
    std::size_t line = 0;
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::string type;
    bool erratum = false;
    std::string cspec, dspec;
    std::string expected_text;
    AqcParams expected;
    std::vector<std::string> labels;
    std::optional<Rational> lp;
    std::string matrix_file;
};

// "[[10,19/3,3/2]]_8"; k may be an integer, p/q or a decimal.
AqcParams parse_aqc_params(const std::string& s);

std::vector<FixtureRow> parse_fixture(const std::string& text, const std::string& file = "");
std::vector<FixtureRow> load_fixture(const std::string& path);

// Builds the nested pair a CC, ACC, GC or AH row describes; BC and SO rows
// need matrix_file. Returns nothing when the row cannot be built from data.
std::optional<NestedPair> build_row_pair(const FixtureRow& row, const std::string& base_dir = "");

enum class RowStatus { Pass, Fail, Skipped, Error, Erratum };
const char* to_string(RowStatus s);

struct RowResult {
    RowStatus status = RowStatus::Skipped;
    std::optional<AqcParams> got;
    std::string message;
};

// Pass when the derived parameters equal the expected ones and the code is
// pure. A marked erratum row that disagrees reports Erratum instead of Fail.
RowResult verify_row(const FixtureRow& row, const std::string& base_dir = "");

// Labels of the goodness scale implied by a bound on k with and without
// F_q-linearity imposed.
std::vector<std::string> goodness_labels(const Rational& k, bool fq_linear, const std::optional<Rational>& bound,
                                         const std::optional<Rational>& bound_linear);

}  // namespace aqc
