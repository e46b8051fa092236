#include "higgs/boson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace higgs {

namespace {

void check_mode(int n_modes, int mode) {
    if (mode < 1 || mode > n_modes)
        throw std::out_of_range("mode index " + std::to_string(mode) +
                                " outside 1.." + std::to_string(n_modes));
}

void check_same_modes(const BosonPolynomial& p, const BosonPolynomial& q) {
    if (p.n_modes() != q.n_modes())
        throw ModeCountMismatch("mode count mismatch: " +
                                std::to_string(p.n_modes()) + " vs " +
                                std::to_string(q.n_modes()));
}

// k! * C(m,k) * C(n,k) for the reordering a^m a†^n, accumulated as
// prod_{i<k} (m-i)(n-i)/(i+1) = falling(m,k) falling(n,k) / k!; exact in
// double for the small exponents this engine works with.
double contraction_weight(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
    double w = 1.0;
    for (std::uint32_t i = 0; i < k; ++i) {
        w *= static_cast<double>(m - i) * static_cast<double>(n - i) /
             static_cast<double>(i + 1);
    }
    return w;
}

}  // namespace

std::uint32_t total_degree(const MultiIndex& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

BosonPolynomial::BosonPolynomial(int n_modes) : n_modes_(n_modes) {
    if (n_modes < 1) throw std::invalid_argument("n_modes must be positive");
}

BosonPolynomial BosonPolynomial::zero(int n_modes) {
    return BosonPolynomial(n_modes);
}

BosonPolynomial BosonPolynomial::constant(int n_modes, Complex value) {
    BosonPolynomial p(n_modes);
    MultiIndex none(static_cast<std::size_t>(n_modes), 0);
    p.accumulate(TermKey{none, none}, value);
    return p;
}

BosonPolynomial BosonPolynomial::creation(int n_modes, int mode) {
    check_mode(n_modes, mode);
    MultiIndex cre(static_cast<std::size_t>(n_modes), 0);
    MultiIndex ann(static_cast<std::size_t>(n_modes), 0);
    cre[static_cast<std::size_t>(mode - 1)] = 1;
    return monomial(n_modes, cre, ann, Complex{1.0, 0.0});
}

BosonPolynomial BosonPolynomial::annihilation(int n_modes, int mode) {
    check_mode(n_modes, mode);
    MultiIndex cre(static_cast<std::size_t>(n_modes), 0);
    MultiIndex ann(static_cast<std::size_t>(n_modes), 0);
    ann[static_cast<std::size_t>(mode - 1)] = 1;
    return monomial(n_modes, cre, ann, Complex{1.0, 0.0});
}

BosonPolynomial BosonPolynomial::number(int n_modes, int mode) {
    check_mode(n_modes, mode);
    MultiIndex cre(static_cast<std::size_t>(n_modes), 0);
    MultiIndex ann(static_cast<std::size_t>(n_modes), 0);
    cre[static_cast<std::size_t>(mode - 1)] = 1;
    ann[static_cast<std::size_t>(mode - 1)] = 1;
    return monomial(n_modes, cre, ann, Complex{1.0, 0.0});
}

BosonPolynomial BosonPolynomial::monomial(int n_modes,
                                          const MultiIndex& creation,
                                          const MultiIndex& annihilation,
                                          Complex coefficient) {
    BosonPolynomial p(n_modes);
    if (creation.size() != static_cast<std::size_t>(n_modes) ||
        annihilation.size() != static_cast<std::size_t>(n_modes))
        throw std::invalid_argument("multi-index length != n_modes");
    p.accumulate(TermKey{creation, annihilation}, coefficient);
    return p;
}

Complex BosonPolynomial::coefficient(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

Complex BosonPolynomial::constant_term() const {
    MultiIndex none(static_cast<std::size_t>(n_modes_), 0);
    return coefficient(TermKey{none, none});
}

BosonPolynomial BosonPolynomial::without_constant() const {
    BosonPolynomial out = *this;
    MultiIndex none(static_cast<std::size_t>(n_modes_), 0);
    out.terms_.erase(TermKey{none, none});
    return out;
}

double BosonPolynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

std::uint32_t BosonPolynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [key, c] : terms_)
        d = std::max(d, total_degree(key.creation) +
                            total_degree(key.annihilation));
    return d;
}

bool BosonPolynomial::conserves_total_number() const {
    for (const auto& [key, c] : terms_)
        if (total_degree(key.creation) != total_degree(key.annihilation))
            return false;
    return true;
}

void BosonPolynomial::accumulate(const TermKey& key, Complex value) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (std::abs(value) < zero_tolerance()) return;
        if (terms_.size() >= term_cap())
            throw TermCapExceeded("polynomial exceeds term cap of " +
                                  std::to_string(term_cap()));
        terms_.emplace(key, value);
        return;
    }
    it->second += value;
    if (std::abs(it->second) < zero_tolerance()) terms_.erase(it);
}

BosonPolynomial& BosonPolynomial::operator+=(const BosonPolynomial& rhs) {
    check_same_modes(*this, rhs);
    for (const auto& [key, c] : rhs.terms_) accumulate(key, c);
    return *this;
}

BosonPolynomial& BosonPolynomial::operator-=(const BosonPolynomial& rhs) {
    check_same_modes(*this, rhs);
    for (const auto& [key, c] : rhs.terms_) accumulate(key, -c);
    return *this;
}

BosonPolynomial& BosonPolynomial::operator*=(Complex scale) {
    if (std::abs(scale) < zero_tolerance()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scale;
        if (std::abs(it->second) < zero_tolerance())
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

BosonPolynomial operator+(BosonPolynomial lhs, const BosonPolynomial& rhs) {
    lhs += rhs;
    return lhs;
}

BosonPolynomial operator-(BosonPolynomial lhs, const BosonPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

BosonPolynomial operator*(Complex scale, BosonPolynomial poly) {
    poly *= scale;
    return poly;
}

BosonPolynomial operator*(BosonPolynomial poly, Complex scale) {
    poly *= scale;
    return poly;
}

BosonPolynomial normal_multiply(const BosonPolynomial& p,
                                const BosonPolynomial& q) {
    check_same_modes(p, q);
    const int n = p.n_modes();
    BosonPolynomial out(n);

    // Per mode: a^b a†^m = sum_k k! C(b,k) C(m,k) a†^{m-k} a^{b-k}, so
    // (a†^al a^b)(a†^m a^nu) expands mode-by-mode independently.
    for (const auto& [kp, cp] : p.terms()) {
        for (const auto& [kq, cq] : q.terms()) {
            struct Partial {
                MultiIndex cre, ann;
                double weight;
            };
            std::vector<Partial> partials{
                {MultiIndex(), MultiIndex(), 1.0}};
            for (int j = 0; j < n; ++j) {
                const std::uint32_t al = kp.creation[j];
                const std::uint32_t b = kp.annihilation[j];
                const std::uint32_t mu = kq.creation[j];
                const std::uint32_t nu = kq.annihilation[j];
                const std::uint32_t kmax = std::min(b, mu);
                std::vector<Partial> next;
                next.reserve(partials.size() * (kmax + 1));
                for (std::uint32_t k = 0; k <= kmax; ++k) {
                    const double w = contraction_weight(b, mu, k);
                    for (const auto& part : partials) {
                        Partial ext = part;
                        ext.cre.push_back(al + mu - k);
                        ext.ann.push_back(b + nu - k);
                        ext.weight *= w;
                        next.push_back(std::move(ext));
                    }
                }
                partials = std::move(next);
            }
            for (const auto& part : partials)
                out.accumulate(TermKey{part.cre, part.ann},
                               cp * cq * part.weight);
        }
    }
    return out;
}

BosonPolynomial operator*(const BosonPolynomial& p, const BosonPolynomial& q) {
    return normal_multiply(p, q);
}

BosonPolynomial commutator(const BosonPolynomial& p, const BosonPolynomial& q) {
    return normal_multiply(p, q) - normal_multiply(q, p);
}

BosonPolynomial formal_adjoint(const BosonPolynomial& p) {
    BosonPolynomial out(p.n_modes());
    // The swapped monomial is already normal-ordered.
    for (const auto& [key, c] : p.terms())
        out.accumulate(TermKey{key.annihilation, key.creation}, std::conj(c));
    return out;
}

double max_coefficient_diff(const BosonPolynomial& p,
                            const BosonPolynomial& q) {
    check_same_modes(p, q);
    double m = 0.0;
    for (const auto& [key, c] : p.terms())
        m = std::max(m, std::abs(c - q.coefficient(key)));
    for (const auto& [key, c] : q.terms())
        m = std::max(m, std::abs(p.coefficient(key) - c));
    return m;
}

std::string to_string(const TermKey& key, int n_modes) {
    std::ostringstream os;
    for (int j = 0; j < n_modes; ++j) {
        if (key.creation[j] == 0) continue;
        os << " * ad(" << (j + 1) << ")";
        if (key.creation[j] > 1) os << "^" << key.creation[j];
    }
    for (int j = 0; j < n_modes; ++j) {
        if (key.annihilation[j] == 0) continue;
        os << " * a(" << (j + 1) << ")";
        if (key.annihilation[j] > 1) os << "^" << key.annihilation[j];
    }
    return os.str();
}

std::string to_string(const BosonPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    char buf[96];
    for (const auto& [key, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        std::snprintf(buf, sizeof buf, "(%.17g%s%.17gi)", c.real(),
                      std::signbit(c.imag()) ? "-" : "+",
                      std::abs(c.imag()));
        os << buf << to_string(key, p.n_modes());
    }
    return os.str();
}

}  // namespace higgs
