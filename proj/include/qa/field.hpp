#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qa {

/// Exact scalar. Rationals are stored as canonical mpq values; prime field
/// elements are stored as integers in [0, p) with denominator 1.
using Rat = mpq_class;

class QaError : public std::runtime_error {
  public:
    explicit QaError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    long p = 0;

    static FieldSpec rationals() { return {Kind::Rationals, 0}; }
    static FieldSpec prime(long p) {
        if (!is_prime(p)) throw QaError("FieldSpec: " + std::to_string(p) + " is not prime");
        return {Kind::Prime, p};
    }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const {
        return kind == Kind::Rationals ? "Q" : "Q(" + std::to_string(p) + ")";
    }
};

/// Arithmetic in a fixed field. All results are in canonical form, so that
/// operator== on Rat is a valid equality test downstream.
class FieldOps {
  public:
    explicit FieldOps(FieldSpec spec) : spec_(spec) {}

    const FieldSpec& spec() const { return spec_; }

    /// Canonical representative of an arbitrary rational in this field.
    Rat reduce(const Rat& x) const {
        if (spec_.kind == FieldSpec::Kind::Rationals) {
            Rat r = x;
            r.canonicalize();
            return r;
        }
        mpz_class p(spec_.p);
        mpz_class den = x.get_den();
        mpz_class num = x.get_num() % p;
        if (num < 0) num += p;
        mpz_class deninv = mod_inverse(den % p, p);
        mpz_class r = (num * deninv) % p;
        return Rat(r);
    }

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_long(long n) const { return reduce(Rat(n)); }

    Rat add(const Rat& a, const Rat& b) const { return reduce(Rat(a + b)); }
    Rat sub(const Rat& a, const Rat& b) const { return reduce(Rat(a - b)); }
    Rat mul(const Rat& a, const Rat& b) const { return reduce(Rat(a * b)); }
    Rat neg(const Rat& a) const { return reduce(Rat(-a)); }

    Rat inv(const Rat& a) const {
        if (a == 0) throw QaError("division by zero");
        if (spec_.kind == FieldSpec::Kind::Rationals) {
            Rat r = 1 / a;
            r.canonicalize();
            return r;
        }
        return Rat(mod_inverse(a.get_num(), mpz_class(spec_.p)));
    }

    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    bool is_zero(const Rat& a) const { return a == 0; }

  private:
    static mpz_class mod_inverse(const mpz_class& a, const mpz_class& p) {
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw QaError("division by zero mod " + p.get_str());
        return r;
    }

    FieldSpec spec_;
};

/// Serialization used by registry files and the DSL: "n" or "n/d" over Q,
/// bare integers in [0,p) over GF(p).
inline std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw QaError("bad scalar literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qa
