#pragma once

// A Hecke-algebra element for fixed n, stored by its values on reduced
// coset types (the psi basis coefficients).

#include "jmwg/partition.hpp"

namespace jmwg {

class HeckeElement {
  public:
    HeckeElement() = default;
    explicit HeckeElement(int n) : n_(n) {}

    int level() const { return n_; }

    void set(const Partition& mu, const Rational& value) {
        if (mu.size() + mu.length() > n_)
            throw std::invalid_argument("HeckeElement: |mu| + len(mu) exceeds n");
        if (value == 0)
            coeffs_.erase(mu);
        else
            coeffs_[mu] = value;
    }

    Rational value(const Partition& mu) const {
        auto it = coeffs_.find(mu);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<Partition, Rational>& coefficients() const { return coeffs_; }

    bool operator==(const HeckeElement& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

  private:
    int n_ = 0;
    std::map<Partition, Rational> coeffs_;
};

}  // namespace jmwg
