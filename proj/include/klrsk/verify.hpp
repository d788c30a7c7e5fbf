/**
 * @file verify.hpp
 * @brief Exhaustive grids of multisegments and permissible pairs, and the
 *        property sweeps run over them. Every sweep has a serial reference
 *        path and an OpenMP path that must agree.
 */
#pragma once

#include "klrsk/multisegment.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klrsk {

struct GridSpec {
    int lo = 0;
    int hi = 3;
    int maxsegs = 4;
    int maxmult = 2;

    /// "window=0..3,maxsegs=4,maxmult=2"; omitted keys keep their defaults.
    static GridSpec parse(std::string_view text);
    std::string to_string() const;
};

/// Nonzero multisegments with endpoints in the window, at most maxsegs
/// segments counted with multiplicity, each multiplicity at most maxmult.
std::vector<Multisegment> grid_multisegments(const GridSpec& g);
/// Every ladder with endpoints in the window.
std::vector<LadderMultisegment> window_ladders(const GridSpec& g);
/// Permissible (ladder, m) with m a grid multisegment or 0.
std::vector<std::pair<LadderMultisegment, Multisegment>> grid_pairs(const GridSpec& g);

enum class Exec { Serial, Parallel };

struct CheckResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    long failures = 0;
    std::string counterexample;  ///< first failing case in enumeration order
    std::string note;
    double seconds = 0;
};

struct VerifyOptions {
    GridSpec grid;
    Exec exec = Exec::Parallel;
    int char_cap = 5;       ///< height cap for the character identities
    int dominant_cap = 0;   ///< height cap for the dominant-word check; 0 means none
};

CheckResult check_roundtrips(const VerifyOptions& o);
CheckResult check_width_law(const VerifyOptions& o);
CheckResult check_endpoint_preservation(const VerifyOptions& o);
CheckResult check_d_theorem(const VerifyOptions& o);
CheckResult check_degree_coherence(const VerifyOptions& o);
CheckResult check_normality(const VerifyOptions& o);
CheckResult check_character_identities(const VerifyOptions& o);
CheckResult check_kappa_monomial(const VerifyOptions& o);
CheckResult check_depth_lemmas(const VerifyOptions& o);
CheckResult check_dominant_multiplicity(const VerifyOptions& o);

/// All ten checks in order.
std::vector<CheckResult> run_all(const VerifyOptions& o);

/// "PASS name (cases=..., failures=..., 0.12s)" plus the counterexample if any.
std::string format_result(const CheckResult& r);

} // namespace klrsk
