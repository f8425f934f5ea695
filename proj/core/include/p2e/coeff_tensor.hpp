#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "p2e/rational.hpp"

namespace p2e {

enum class Quantity { phi, h, sin, cos };
enum class Form { sinpow, fourier };

std::string quantity_name(Quantity q);
std::string form_name(Form f);
Quantity parse_quantity(const std::string& s);
Form parse_form(const std::string& s);

/// Truncation bounds: outer sin-power/angle-multiple order n <= N, rho-power
/// order k <= K, e2-power order l <= L.
struct Bounds {
  int n = 0;
  int k = 0;
  int l = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Structural index limits of the eight series families.
/// Sin-power forms have a finite l-window per (n,k); Fourier forms are bounded
/// below only, so their upper l limit is whatever the tensor bounds impose.
int window_nmin(Quantity q, Form f);
int window_kmin(Quantity q, Form f);
int window_lmin(Quantity q, Form f, int n, int k);
/// Upper l limit for sinpow forms; -1 for fourier forms (unbounded).
int window_lmax(Quantity q, Form f, int n, int k);
bool in_window(Quantity q, Form f, int n, int k, int l);

/// Exact coefficient tensor for one (quantity, form). Entries live strictly
/// inside the structural window; an absent in-window entry is an exact zero.
class CoeffTensor {
 public:
  using Key = std::tuple<int, int, int>;  // (n, k, l)
  using Entries = std::map<Key, Rational>;

  CoeffTensor(Quantity q, Form f, Bounds b) : quantity_(q), form_(f), bounds_(b) {}

  Quantity quantity() const { return quantity_; }
  Form form() const { return form_; }
  const Bounds& bounds() const { return bounds_; }
  const Entries& entries() const { return entries_; }

  /// Stores a value; zero values are dropped. Rejects out-of-window or
  /// out-of-bounds indices.
  void set(int n, int k, int l, const Rational& value) {
    if (!contains_index(n, k, l))
      throw std::domain_error("tensor: index (" + std::to_string(n) + "," + std::to_string(k) + "," +
                              std::to_string(l) + ") outside structural window or bounds");
    if (value.is_zero())
      entries_.erase({n, k, l});
    else
      entries_.insert_or_assign({n, k, l}, value);
  }

  /// Exact value; zero for absent in-window entries. Rejects out-of-window.
  Rational get(int n, int k, int l) const {
    if (!contains_index(n, k, l)) throw std::domain_error("tensor: index outside structural window or bounds");
    auto it = entries_.find({n, k, l});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  bool contains_index(int n, int k, int l) const {
    return n <= bounds_.n && k <= bounds_.k && l <= bounds_.l && in_window(quantity_, form_, n, k, l);
  }

 private:
  Quantity quantity_;
  Form form_;
  Bounds bounds_;
  Entries entries_;
};

/// Line-oriented cache: header "p2e-coeffs v1 <quantity> <form> N=.. K=.. L=..",
/// then one "<n> <k> <l> <p/q>" line per nonzero entry in (n,k,l) order.
/// Round-trips bit-exactly.
void write_cache(const CoeffTensor& t, std::ostream& out);

/// Parses and validates a cache stream; rejects malformed headers and entries
/// outside the structural window.
CoeffTensor read_cache(std::istream& in);

}  // namespace p2e
