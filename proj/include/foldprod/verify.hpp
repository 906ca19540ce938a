#pragma once

#include "foldprod/fold.hpp"
#include "foldprod/resolution.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace foldprod {

/// Ranks of the predicted linear resolution of R/I_{n-2}(A):
///   R^{b3}(-n) -> R^{b2}(-(n-1)) -> R^{b1}(-(n-2)) -> R
/// with b1 = m - p, b2 = 2m - n - 2p, b3 = m - n - p + 1, m = C(n,2).
struct PredictedBetti {
    long n = 0;
    long m = 0;
    long p = 0;
    size_t k = 0;
    long b1 = 0, b2 = 0, b3 = 0;
};

PredictedBetti predicted_betti(const Arrangement& A);

struct MainTheoremReport {
    PredictedBetti predicted;
    BettiTable computed;
    bool linear = false;
    long regularity = 0;
    bool trivial_unit = false; // n = 2: I_0 = R, zero module, empty Betti table
    bool pass = false;
};

/// Computes the minimal resolution of I_{n-2}(A) and checks it is linear with
/// exactly the predicted ranks and regularity n - 3.
MainTheoremReport verify_main_theorem(const Arrangement& A, const Budget& budget = {});

struct KernelReport {
    long p = 0;
    long dmax = 0;
    std::vector<long> kernel_hf;   // dim of the kernel in each degree 0..dmax
    std::vector<long> expected_hf; // p * dim K[k-2 vars]_d
    bool circuits_in_kernel = false; // exact: each circuit tuple maps to zero
    bool pass = false;
};

/// Degree-by-degree certificate that the kernel of the product map equals the
/// circuit submodule, via Hilbert functions (certified up to dmax, not beyond).
KernelReport phi_kernel_check(const Arrangement& A, long dmax, const Budget& budget = {});

struct CmReport {
    long p = 0;
    bool cm_predicted = false;
    int pdim = 0;
    long height = 0;
    bool pass = false;
};

/// Cohen-Macaulay criterion for R/I_{n-2}(A): predicted from rank and p(A),
/// cross-checked against projective dimension and height.
CmReport cm_criterion(const Arrangement& A, const Budget& budget = {});

struct TopReport {
    long n = 0;
    long s = 0; // distinct support forms
    BettiTable computed;
    bool pass = false;
};

/// Resolution of I_{n-1}(S) has ranks (s, s-1) at twists (n-1, n).
TopReport verify_a_n_minus_1(const Arrangement& S, const Budget& budget = {});

struct Claim4Report {
    long n = 0;
    long flat_count = 0;
    long flat_size_sum = 0;
    bool holds = false; // flat_size_sum - flat_count >= n
};

/// The rank >= 3 flat-count inequality.
Claim4Report claim4_check(const Arrangement& A);

struct ScanCase {
    Arrangement sigma;
    long a = 0;
};

struct ScanCaseResult {
    size_t index = 0;
    long n = 0;
    long a = 0;
    size_t k = 0;
    bool completed = false;
    bool linear = false;
    bool budget_exceeded = false;
    std::string error;
};

struct ScanReport {
    uint64_t seed = 0; // 0 when the family is explicit
    std::vector<ScanCaseResult> cases;
    bool all_linear = false;   // over completed cases
    bool k2_all_pass = false;  // every completed k = 2 case is linear
};

/// Runs the linear-resolution verdict over a family of (Sigma, a) cases.
/// Cases are independent and run in parallel; results are aggregated in case
/// order. Budget errors are recorded per case, the scan continues.
ScanReport conjecture_scan(const std::vector<ScanCase>& cases, const Budget& budget = {});

/// Seeded pseudo-random reduced arrangements with integer coefficients in
/// [-3, 3]; deterministic across platforms.
Arrangement random_arrangement(uint64_t& state, size_t k, size_t n, bool reduced = true);
uint64_t splitmix64_next(uint64_t& state);

struct K2Report {
    long n = 0;
    long support = 0;
    bool all_linear = false;
    bool powers_match = false; // I_b(support) = m^b for b <= support-1
    bool top_principal = false;
    bool pass = false;
};

/// Two-variable theorem: every I_a of the multiset has a linear resolution,
/// and the reduced support satisfies the maximal-ideal power identity.
K2Report verify_k2(const Arrangement& sigma, const Budget& budget = {});

struct SingularPoint {
    std::array<Rational, 3> point; // projective coordinates, first nonzero = 1
    std::vector<size_t> lines;     // indices of forms vanishing at the point
    Ideal prime;                   // two independent linear forms through it
};

/// Pairwise intersection points of an essential line arrangement in three
/// variables, deduplicated, sorted by coordinates.
std::vector<SingularPoint> singular_locus(const Arrangement& A);

struct PrimaryReport {
    std::vector<SingularPoint> points;
    bool factors_contain = false;
    bool equality = false;     // I_{n-2} = (cap of point powers) cap m^{n-2}
    bool sat_equality = false; // saturation = cap of point powers
    bool pass = false;
};

PrimaryReport primary_decomposition_check(const Arrangement& A, const Budget& budget = {});

} // namespace foldprod
