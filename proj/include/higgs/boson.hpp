#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace higgs {

using Complex = std::complex<double>;

/// Per-mode exponents of one side (creation or annihilation) of a
/// normal-ordered monomial.
using MultiIndex = std::vector<std::uint32_t>;

std::uint32_t total_degree(const MultiIndex& m);

/// Key of one normal-ordered term: a†^creation a^annihilation.
/// Ordering is lexicographic on (creation, annihilation); this is the
/// canonical term order used for serialization and iteration.
struct TermKey {
    MultiIndex creation;
    MultiIndex annihilation;

    auto operator<=>(const TermKey&) const = default;
};

struct ModeCountMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TermCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite sum of normal-ordered boson monomials with complex coefficients.
///
/// Values are immutable in spirit: all operations return new polynomials,
/// never mutate shared state, and are safe to use from multiple threads.
/// Coefficients with magnitude below `zero_tolerance()` are pruned so the
/// term map stays canonical and equality is map equality.
class BosonPolynomial {
  public:
    explicit BosonPolynomial(int n_modes);

    static BosonPolynomial zero(int n_modes);
    static BosonPolynomial constant(int n_modes, Complex value);
    /// a†_mode (1-based mode index)
    static BosonPolynomial creation(int n_modes, int mode);
    /// a_mode (1-based mode index)
    static BosonPolynomial annihilation(int n_modes, int mode);
    /// a†_mode a_mode
    static BosonPolynomial number(int n_modes, int mode);
    static BosonPolynomial monomial(int n_modes, const MultiIndex& creation,
                                    const MultiIndex& annihilation,
                                    Complex coefficient);

    int n_modes() const { return n_modes_; }
    const std::map<TermKey, Complex>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Complex coefficient(const TermKey& key) const;
    /// Coefficient of the identity (empty multi-indices) term.
    Complex constant_term() const;
    /// Polynomial with the identity term removed.
    BosonPolynomial without_constant() const;

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    double max_abs_coefficient() const;
    /// Max creation/annihilation total degree over all terms.
    std::uint32_t degree() const;
    /// True when every term has equal total creation and annihilation degree.
    bool conserves_total_number() const;

    BosonPolynomial& operator+=(const BosonPolynomial& rhs);
    BosonPolynomial& operator-=(const BosonPolynomial& rhs);
    BosonPolynomial& operator*=(Complex scale);

    bool operator==(const BosonPolynomial& rhs) const = default;

    static double zero_tolerance() { return 1e-14; }
    static std::size_t term_cap() { return 100000; }

    /// Adds coefficient to the term at key, pruning if the result is ~0.
    void accumulate(const TermKey& key, Complex value);

  private:
    int n_modes_;
    std::map<TermKey, Complex> terms_;
};

BosonPolynomial operator+(BosonPolynomial lhs, const BosonPolynomial& rhs);
BosonPolynomial operator-(BosonPolynomial lhs, const BosonPolynomial& rhs);
BosonPolynomial operator*(Complex scale, BosonPolynomial poly);
BosonPolynomial operator*(BosonPolynomial poly, Complex scale);

/// Product in the Weyl algebra, reduced to normal order with
/// a_j a†_j = a†_j a_j + 1 applied per mode.
BosonPolynomial normal_multiply(const BosonPolynomial& p,
                                const BosonPolynomial& q);
BosonPolynomial operator*(const BosonPolynomial& p, const BosonPolynomial& q);

/// normal_multiply(p, q) - normal_multiply(q, p)
BosonPolynomial commutator(const BosonPolynomial& p, const BosonPolynomial& q);

/// Formal dagger: (c, alpha, beta) -> (conj c, beta, alpha). Involutive.
BosonPolynomial formal_adjoint(const BosonPolynomial& p);

/// Max coefficient magnitude of p - q; the residual used by identity checks.
double max_coefficient_diff(const BosonPolynomial& p, const BosonPolynomial& q);

/// Canonical text form, e.g. "(2+0i) * ad(1)^2 * a(2)". Deterministic:
/// terms in canonical key order, coefficients with 17 significant digits.
std::string to_string(const BosonPolynomial& p);
std::string to_string(const TermKey& key, int n_modes);

}  // namespace higgs
