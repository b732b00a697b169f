#pragma once

#include "ccforge/rational.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ccforge {

/// Default weighted truncation order for class computations.
inline constexpr int kDefaultOrder = 8;

/// Ordered list of formal generators with positive integer weights.
/// Chern class c_i has weight i; Chern roots and the fiber class have weight 1.
class GeneratorTable {
public:
    struct Generator {
        std::string name;
        int weight = 1;

        friend bool operator==(const Generator&, const Generator&) = default;
    };

    GeneratorTable() = default;
    explicit GeneratorTable(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& at(std::size_t i) const { return gens_.at(i); }
    const std::vector<Generator>& generators() const { return gens_; }

    /// Index of a generator by name; throws if unknown.
    std::size_t index_of(const std::string& name) const;

    int weight_of(std::span<const int> exps) const;

    friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;

private:
    std::vector<Generator> gens_;
};

using GeneratorTablePtr = std::shared_ptr<const GeneratorTable>;

GeneratorTablePtr make_table(std::vector<GeneratorTable::Generator> gens);

/// Returns a table with the generators of `base` followed by one extra generator.
GeneratorTablePtr extend_table(const GeneratorTablePtr& base, const std::string& name,
                               int weight);

/// Monomial exponent vector; entry i is the power of generator i.
using Monomial = std::vector<int>;

class OneVarSeries;

/// Truncated multivariate power series with exact rational coefficients,
/// graded by the weighted total degree of the generators.
///
/// Terms of weight above the truncation order are identically discarded by
/// every operation, so a series represents a class modulo weight > order.
/// Values are immutable; all operations return new series. Stored terms are
/// kept canonical: no zero coefficients, deterministic lexicographic order.
class GradedSeries {
public:
    using TermMap = std::map<Monomial, Rat>;

    GradedSeries(GeneratorTablePtr table, int truncation);

    /// Constant series.
    static GradedSeries constant(GeneratorTablePtr table, int truncation, const Rat& c);
    static GradedSeries zero(GeneratorTablePtr table, int truncation) {
        return GradedSeries(std::move(table), truncation);
    }
    static GradedSeries one(GeneratorTablePtr table, int truncation) {
        return constant(std::move(table), truncation, Rat(1));
    }
    /// The generator with the given index, as a series.
    static GradedSeries generator(GeneratorTablePtr table, int truncation, std::size_t index);

    const GeneratorTablePtr& table() const { return table_; }
    int truncation() const { return truncation_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rat constant_term() const;

    /// Stored coefficient of `mono`, or exact zero. Throws if the monomial's
    /// weight exceeds the truncation (the value is unknown, not zero).
    Rat coeff_of(const Monomial& mono) const;

    /// Adds c * x^mono; discards the term when its weight exceeds the truncation.
    void add_term(const Monomial& mono, const Rat& c);

    GradedSeries operator-() const;
    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator*(const Rat& c, const GradedSeries& a);

    friend bool operator==(const GradedSeries& a, const GradedSeries& b);
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

    /// Multiplicative inverse; requires a nonzero constant term.
    GradedSeries invert() const;

    /// Integer power by repeated squaring.
    GradedSeries pow(int k) const;

    /// Re-truncates to a lower order, discarding higher-weight terms.
    GradedSeries truncate_to(int order) const;

    /// The weight-w homogeneous part.
    GradedSeries homogeneous_part(int w) const;

    /// exp of a series with zero constant term.
    GradedSeries exp() const;

    /// Applies a permutation of the generators to every exponent vector.
    /// perm[i] = destination index of generator i; weights must agree.
    GradedSeries permute_generators(const std::vector<std::size_t>& perm) const;

    /// Human-readable form, e.g. "1 - 1/2*c1 + c1*c2^2".
    std::string str() const;

private:
    void check_same_ring(const GradedSeries& other) const;

    GeneratorTablePtr table_;
    int truncation_;
    TermMap terms_;
};

/// Substitutes series `values[i]` for generator i of `templ`.
/// All values must live in one common ring; the result is truncated at
/// min(templ.truncation, values ring truncation).
GradedSeries substitute_generators(const GradedSeries& templ,
                                   const std::vector<GradedSeries>& values);

/// One-variable truncated power series, dense exact-rational coefficients.
/// coeff(k) is the coefficient of x^k; order() = highest retained degree.
class OneVarSeries {
public:
    OneVarSeries() : coeffs_(1) {}
    explicit OneVarSeries(std::vector<Rat> coeffs, bool is_polynomial = false);

    /// Zero series of the given order (order+1 coefficients).
    static OneVarSeries zero(int order);

    /// exp(x) truncated at the given order.
    static OneVarSeries exp_series(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// True when this series is an exact polynomial rather than the
    /// truncation of an infinite series.
    bool is_polynomial() const { return is_polynomial_; }

    bool is_zero() const;

    OneVarSeries operator-() const;
    friend OneVarSeries operator+(const OneVarSeries& a, const OneVarSeries& b);
    friend OneVarSeries operator-(const OneVarSeries& a, const OneVarSeries& b);
    friend OneVarSeries operator*(const OneVarSeries& a, const OneVarSeries& b);
    friend OneVarSeries operator*(const Rat& c, const OneVarSeries& a);
    friend bool operator==(const OneVarSeries& a, const OneVarSeries& b);
    friend bool operator!=(const OneVarSeries& a, const OneVarSeries& b) { return !(a == b); }

    /// Multiplicative inverse; requires a nonzero constant term.
    OneVarSeries invert() const;

    /// log of a series with constant term 1.
    OneVarSeries log() const;

    OneVarSeries truncate_to(int order) const;

    /// Zero-extends a polynomial to a higher order; exact because the
    /// missing coefficients of a polynomial really are zero.
    OneVarSeries pad_to(int order) const;

    std::string str() const;

private:
    std::vector<Rat> coeffs_;
    bool is_polynomial_ = false;
};

/// Evaluates f at s: sum of f_k * s^k, truncated at s's order.
/// Requires s to have zero constant term unless f is a polynomial.
GradedSeries substitute(const OneVarSeries& f, const GradedSeries& s);

}  // namespace ccforge
