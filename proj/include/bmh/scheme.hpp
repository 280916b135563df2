#pragma once

#include "bmh/linalg.hpp"
#include "bmh/ratfunc.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace bmh {

/// Number of relations R_0..R_4 of the schemes handled here.
inline constexpr int kRelations = 5;

template <class T>
using Tensor3 = std::array<std::array<std::array<T, kRelations>, kRelations>, kRelations>;

/// First and second eigenmatrix in (q, r), where r = q^(m-1) so that q*r = q^m.
struct EigenData {
    Matrix<RatFunc> P;
    Matrix<RatFunc> Q;
    RatFunc n;  // q^2 r^2 - 1
};

/// Eigenmatrix of the 4-class scheme with Q = n P^{-1} obtained by fraction-free
/// inversion. Throws std::logic_error if P Q != n I.
EigenData build_eigen();

/// Integer parameters (q, m). Throws std::invalid_argument unless q >= 4, m >= 2
/// and q^(2m) fits comfortably in 62 bits.
struct SchemeParams {
    SchemeParams(long q, long m);
    long q;
    long m;
    long r() const;  // q^(m-1)
    long n() const;  // q^(2m) - 1
    std::map<Var, Rational> assignment() const;
    std::string str() const;
};

/// p[i][j][k] = p_{ij}^k as rational functions of (q, r).
struct IntersectionTensor {
    Tensor3<RatFunc> p;

    const RatFunc& operator()(int i, int j, int k) const { return p[i][j][k]; }
    RatFunc& operator()(int i, int j, int k) { return p[i][j][k]; }
    /// (B_i)[j][k] = p_{ij}^k.
    Matrix<RatFunc> B(int i) const;
};

/// p_{ij}^k = 1/(n P[0][k]) sum_l Q[0][l] P[l][i] P[l][j] P[l][k].
IntersectionTensor intersection_tensor(const EigenData& e);

/// Reference B-matrices, entered verbatim from a machine-checked table.
IntersectionTensor reference_intersection_tensor();

/// Entries whose typeset value in the displayed B-matrices disagrees with the
/// machine-checked table.
struct TypesetEntry {
    int i, j, k;
    RatFunc value;
};
std::vector<TypesetEntry> typeset_misprints();

struct EntryMismatch {
    int i, j, k;
    std::string computed;
    std::string expected;
};

/// Entry-by-entry exact comparison; empty means all 125 entries agree.
std::vector<EntryMismatch> compare_tensors(const IntersectionTensor& computed, const IntersectionTensor& expected);

inline std::vector<EntryMismatch> check_against_printed_B(const IntersectionTensor& t) {
    return compare_tensors(t, reference_intersection_tensor());
}

/// Intersection numbers of a concrete scheme.
struct ConcreteTensor {
    Tensor3<Rational> p;
    Rational n;

    const Rational& operator()(int i, int j, int k) const { return p[i][j][k]; }
    Rational& operator()(int i, int j, int k) { return p[i][j][k]; }
    /// k_i = p_{ii}^0.
    const Rational& valency(int i) const { return p[i][i][0]; }
    Matrix<Rational> B(int i) const;
};

ConcreteTensor specialize(const IntersectionTensor& t, const SchemeParams& params);

/// Human-readable descriptions of violated identities: symmetry in (i, j),
/// p_{ij}^0 = delta_ij k_i, row sums sum_j p_{ij}^k = k_i, k_k p_{ij}^k = k_i p_{jk}^i,
/// and B_i B_j = sum_k p_{ij}^k B_k. Empty means all hold.
std::vector<std::string> tensor_identity_violations(const IntersectionTensor& t);
std::vector<std::string> tensor_identity_violations(const ConcreteTensor& t);

/// Entries that are not non-negative integers.
std::vector<std::string> integrality_violations(const ConcreteTensor& t);

/// Dense relation matrix of a (claimed) realization of a 4-class scheme.
class SchemeInstance {
public:
    SchemeInstance() = default;
    /// No validation beyond the shape: rel must have n*n entries.
    SchemeInstance(std::size_t n, std::vector<std::uint8_t> rel);

    std::size_t size() const { return n_; }
    int operator()(std::size_t x, std::size_t y) const { return rel_[x * n_ + y]; }
    const std::uint8_t* row(std::size_t x) const { return rel_.data() + x * n_; }
    void set(std::size_t x, std::size_t y, int value) { rel_[x * n_ + y] = static_cast<std::uint8_t>(value); }

    /// Text format: "n 4" on the first line, then n rows of n values in 0..4.
    /// Rejects malformed, asymmetric or wrong-diagonal input with
    /// std::runtime_error naming the line.
    static SchemeInstance parse(std::istream& in);
    static SchemeInstance load(const std::filesystem::path& path);
    void write(std::ostream& out) const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> rel_;
};

/// Hamming scheme H(4, s) on s^4 words: relation = Hamming distance. A
/// convenient genuine 4-class scheme for tests and benchmarks.
SchemeInstance hamming_instance(int s);

/// Intersection numbers read off an instance, taking one base pair per
/// relation from the rows of the instance. Assumes the instance is a scheme.
ConcreteTensor tensor_from_instance(const SchemeInstance& s);

enum class Execution { serial, parallel };

struct ValidateOptions {
    std::size_t samples_per_class = 200;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    Execution execution = Execution::parallel;
    std::size_t max_witnesses = 16;
};

/// A failed check. x, y, i, j are -1 when not applicable.
struct InstanceWitness {
    std::string check;  // "size", "diagonal", "symmetry", "valency", "intersection"
    long x = -1, y = -1, i = -1, j = -1;
    long observed = 0;
    Rational expected;
    std::string str() const;
};

struct InstanceReport {
    bool passed = true;
    std::size_t pairs_checked = 0;
    std::vector<InstanceWitness> failures;
};

/// Checks shape, symmetry, diagonal, valencies and (sampled or exhaustive)
/// intersection numbers of s against t. Reports are identical for both
/// execution modes.
InstanceReport validate_instance(const SchemeInstance& s, const ConcreteTensor& t, const ValidateOptions& opts = {});

}  // namespace bmh
