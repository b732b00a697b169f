#include "ccforge/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ccforge {

GeneratorTable::GeneratorTable(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.weight < 1) throw std::invalid_argument("GeneratorTable: weight must be >= 1");
        if (!names.insert(g.name).second)
            throw std::invalid_argument("GeneratorTable: duplicate generator '" + g.name + "'");
    }
}

std::size_t GeneratorTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    throw std::invalid_argument("GeneratorTable: unknown generator '" + name + "'");
}

int GeneratorTable::weight_of(std::span<const int> exps) const {
    if (exps.size() != gens_.size())
        throw std::invalid_argument("GeneratorTable: exponent vector has wrong length");
    int w = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("GeneratorTable: negative exponent");
        w += exps[i] * gens_[i].weight;
    }
    return w;
}

GeneratorTablePtr make_table(std::vector<GeneratorTable::Generator> gens) {
    return std::make_shared<const GeneratorTable>(std::move(gens));
}

GeneratorTablePtr extend_table(const GeneratorTablePtr& base, const std::string& name,
                               int weight) {
    auto gens = base->generators();
    gens.push_back({name, weight});
    return make_table(std::move(gens));
}

GradedSeries::GradedSeries(GeneratorTablePtr table, int truncation)
    : table_(std::move(table)), truncation_(truncation) {
    if (!table_) throw std::invalid_argument("GradedSeries: null generator table");
    if (truncation_ < 0) throw std::invalid_argument("GradedSeries: negative truncation");
}

GradedSeries GradedSeries::constant(GeneratorTablePtr table, int truncation, const Rat& c) {
    GradedSeries s(std::move(table), truncation);
    if (!c.is_zero()) s.terms_.emplace(Monomial(s.table_->size(), 0), c);
    return s;
}

GradedSeries GradedSeries::generator(GeneratorTablePtr table, int truncation,
                                     std::size_t index) {
    GradedSeries s(std::move(table), truncation);
    if (index >= s.table_->size())
        throw std::invalid_argument("GradedSeries: generator index out of range");
    Monomial m(s.table_->size(), 0);
    m[index] = 1;
    s.add_term(m, Rat(1));
    return s;
}

Rat GradedSeries::constant_term() const {
    auto it = terms_.find(Monomial(table_->size(), 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat GradedSeries::coeff_of(const Monomial& mono) const {
    const int w = table_->weight_of(mono);
    if (w > truncation_)
        throw std::domain_error("GradedSeries: monomial weight exceeds truncation");
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GradedSeries::add_term(const Monomial& mono, const Rat& c) {
    if (c.is_zero()) return;
    if (table_->weight_of(mono) > truncation_) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GradedSeries::check_same_ring(const GradedSeries& other) const {
    if (table_ == other.table_) return;
    if (*table_ != *other.table_)
        throw std::invalid_argument("GradedSeries: generator tables do not match");
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries r(table_, truncation_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    a.check_same_ring(b);
    GradedSeries r(a.table_, std::min(a.truncation_, b.truncation_));
    for (const auto& [m, c] : a.terms_) r.add_term(m, c);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) { return a + (-b); }

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.check_same_ring(b);
    const int order = std::min(a.truncation_, b.truncation_);
    GradedSeries r(a.table_, order);
    const auto& weights = a.table_->generators();
    Monomial m(a.table_->size());
    for (const auto& [ma, ca] : a.terms_) {
        const int wa = a.table_->weight_of(ma);
        for (const auto& [mb, cb] : b.terms_) {
            int w = wa;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
                w += mb[i] * weights[i].weight;
            }
            if (w > order) continue;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

GradedSeries operator*(const Rat& c, const GradedSeries& a) {
    GradedSeries r(a.table_, a.truncation_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
    return r;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
    a.check_same_ring(b);
    return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

GradedSeries GradedSeries::invert() const {
    const Rat c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("GradedSeries: cannot invert, zero constant term");
    // a = c0 (1 - u) with u of positive weight; 1/a = (1/c0) sum_k u^k.
    const Rat c0inv = Rat(1) / c0;
    GradedSeries u = one(table_, truncation_) - c0inv * (*this);
    GradedSeries acc = one(table_, truncation_);
    for (int k = 0; k < truncation_; ++k) acc = one(table_, truncation_) + u * acc;
    return c0inv * acc;
}

GradedSeries GradedSeries::pow(int k) const {
    if (k < 0) throw std::invalid_argument("GradedSeries: negative power");
    GradedSeries base = *this;
    GradedSeries r = one(table_, truncation_);
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

GradedSeries GradedSeries::truncate_to(int order) const {
    if (order > truncation_)
        throw std::invalid_argument("GradedSeries: cannot raise truncation");
    GradedSeries r(table_, order);
    for (const auto& [m, c] : terms_)
        if (table_->weight_of(m) <= order) r.terms_.emplace(m, c);
    return r;
}

GradedSeries GradedSeries::homogeneous_part(int w) const {
    GradedSeries r(table_, truncation_);
    for (const auto& [m, c] : terms_)
        if (table_->weight_of(m) == w) r.terms_.emplace(m, c);
    return r;
}

GradedSeries GradedSeries::exp() const {
    if (!constant_term().is_zero())
        throw std::domain_error("GradedSeries: exp requires zero constant term");
    GradedSeries r = one(table_, truncation_);
    GradedSeries power = one(table_, truncation_);
    Rat inv_fact(1);
    for (int k = 1; k <= truncation_; ++k) {
        power = power * (*this);
        if (power.is_zero()) break;
        inv_fact /= Rat(k);
        r = r + inv_fact * power;
    }
    return r;
}

GradedSeries GradedSeries::permute_generators(const std::vector<std::size_t>& perm) const {
    if (perm.size() != table_->size())
        throw std::invalid_argument("GradedSeries: permutation has wrong length");
    GradedSeries r(table_, truncation_);
    Monomial m(table_->size());
    for (const auto& [mono, c] : terms_) {
        std::fill(m.begin(), m.end(), 0);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (perm[i] >= m.size() ||
                table_->at(i).weight != table_->at(perm[i]).weight)
                throw std::invalid_argument("GradedSeries: invalid generator permutation");
            m[perm[i]] = mono[i];
        }
        r.add_term(m, c);
    }
    return r;
}

std::string GradedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rat a = (!first && c.sign() < 0) ? -c : c;
        if (!first) out << (c.sign() < 0 ? " - " : " + ");
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += table_->at(i).name;
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out << a.str();
        } else if (a.is_one()) {
            out << vars;
        } else {
            out << a.str() << "*" << vars;
        }
        first = false;
    }
    return out.str();
}

GradedSeries substitute_generators(const GradedSeries& templ,
                                   const std::vector<GradedSeries>& values) {
    if (values.size() != templ.table()->size())
        throw std::invalid_argument("substitute_generators: one value per generator required");
    if (values.empty()) {
        throw std::invalid_argument("substitute_generators: empty generator table");
    }
    const auto& ring = values.front();
    for (const auto& v : values)
        if (*v.table() != *ring.table())
            throw std::invalid_argument("substitute_generators: values live in different rings");

    const int order = std::min(templ.truncation(), ring.truncation());
    GradedSeries result = GradedSeries::zero(ring.table(), order);

    // Memoized powers of each value, grown on demand.
    std::vector<std::vector<GradedSeries>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        powers[i].push_back(GradedSeries::one(ring.table(), order));
    auto power = [&](std::size_t i, int k) -> const GradedSeries& {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(cache.back() * values[i]);
        return cache[static_cast<std::size_t>(k)];
    };

    for (const auto& [mono, c] : templ.terms()) {
        GradedSeries term = GradedSeries::constant(ring.table(), order, c);
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (mono[i] > 0) term = term * power(i, mono[i]);
        result = result + term;
    }
    return result;
}

OneVarSeries::OneVarSeries(std::vector<Rat> coeffs, bool is_polynomial)
    : coeffs_(std::move(coeffs)), is_polynomial_(is_polynomial) {
    if (coeffs_.empty()) throw std::invalid_argument("OneVarSeries: empty coefficient list");
}

OneVarSeries OneVarSeries::zero(int order) {
    return OneVarSeries(std::vector<Rat>(static_cast<std::size_t>(order) + 1));
}

OneVarSeries OneVarSeries::exp_series(int order) {
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
    Rat f(1);
    c[0] = Rat(1);
    for (int k = 1; k <= order; ++k) {
        f /= Rat(k);
        c[static_cast<std::size_t>(k)] = f;
    }
    return OneVarSeries(std::move(c));
}

bool OneVarSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return c.is_zero(); });
}

OneVarSeries OneVarSeries::operator-() const {
    std::vector<Rat> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return OneVarSeries(std::move(c), is_polynomial_);
}

OneVarSeries operator+(const OneVarSeries& a, const OneVarSeries& b) {
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return OneVarSeries(std::move(c), a.is_polynomial_ && b.is_polynomial_);
}

OneVarSeries operator-(const OneVarSeries& a, const OneVarSeries& b) { return a + (-b); }

OneVarSeries operator*(const OneVarSeries& a, const OneVarSeries& b) {
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return OneVarSeries(std::move(c), a.is_polynomial_ && b.is_polynomial_);
}

OneVarSeries operator*(const Rat& c, const OneVarSeries& a) {
    std::vector<Rat> r(a.coeffs_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a.coeffs_[i];
    return OneVarSeries(std::move(r), a.is_polynomial_);
}

bool operator==(const OneVarSeries& a, const OneVarSeries& b) {
    return a.coeffs_ == b.coeffs_;
}

OneVarSeries OneVarSeries::invert() const {
    if (coeffs_[0].is_zero())
        throw std::domain_error("OneVarSeries: cannot invert, zero constant term");
    std::vector<Rat> b(coeffs_.size());
    b[0] = Rat(1) / coeffs_[0];
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Rat acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * b[n - k];
        b[n] = -acc / coeffs_[0];
    }
    return OneVarSeries(std::move(b));
}

OneVarSeries OneVarSeries::log() const {
    if (!coeffs_[0].is_one())
        throw std::domain_error("OneVarSeries: log requires constant term 1");
    const int order = this->order();
    std::vector<Rat> uc = coeffs_;
    uc[0] = Rat(0);
    const OneVarSeries u(std::move(uc));
    OneVarSeries result = OneVarSeries::zero(order);
    OneVarSeries power = u;
    for (int k = 1; k <= order; ++k) {
        const Rat c = Rat(k % 2 == 1 ? 1 : -1) / Rat(k);
        result = result + c * power;
        if (k < order) power = power * u;
    }
    return result;
}

OneVarSeries OneVarSeries::truncate_to(int order) const {
    if (order > this->order()) throw std::invalid_argument("OneVarSeries: cannot raise order");
    std::vector<Rat> c(coeffs_.begin(), coeffs_.begin() + order + 1);
    return OneVarSeries(std::move(c), is_polynomial_);
}

OneVarSeries OneVarSeries::pad_to(int order) const {
    if (order <= this->order()) return truncate_to(order);
    if (!is_polynomial_)
        throw std::domain_error("OneVarSeries: cannot zero-extend a truncated series");
    std::vector<Rat> c = coeffs_;
    c.resize(static_cast<std::size_t>(order) + 1);
    return OneVarSeries(std::move(c), true);
}

std::string OneVarSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) out << " + ";
        out << coeffs_[k].str();
        if (k >= 1) out << "*x" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) return "0";
    return out.str();
}

GradedSeries substitute(const OneVarSeries& f, const GradedSeries& s) {
    const bool nilpotent = s.constant_term().is_zero();
    if (!nilpotent && !f.is_polynomial())
        throw std::domain_error(
            "substitute: argument has nonzero constant term and profile is not a polynomial");
    int top;
    if (f.is_polynomial()) {
        top = 0;
        for (int k = f.order(); k >= 0; --k)
            if (!f.coeff(k).is_zero()) {
                top = k;
                break;
            }
        if (nilpotent) top = std::min(top, s.truncation());
    } else {
        if (f.order() < s.truncation())
            throw std::invalid_argument(
                "substitute: profile order is below the target truncation");
        top = s.truncation();
    }
    // Horner evaluation from the highest retained degree down.
    GradedSeries acc =
        GradedSeries::constant(s.table(), s.truncation(), f.coeff(top));
    for (int k = top - 1; k >= 0; --k) {
        acc = acc * s;
        acc = acc + GradedSeries::constant(s.table(), s.truncation(), f.coeff(k));
    }
    return acc;
}

}  // namespace ccforge
