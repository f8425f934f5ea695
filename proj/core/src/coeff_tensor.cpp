#include "p2e/coeff_tensor.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace p2e {

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::phi: return "phi";
    case Quantity::h: return "h";
    case Quantity::sin: return "sin";
    case Quantity::cos: return "cos";
  }
  throw std::logic_error("quantity_name: bad enum");
}

std::string form_name(Form f) { return f == Form::sinpow ? "sinpow" : "fourier"; }

Quantity parse_quantity(const std::string& s) {
  if (s == "phi") return Quantity::phi;
  if (s == "h") return Quantity::h;
  if (s == "sin") return Quantity::sin;
  if (s == "cos") return Quantity::cos;
  throw std::invalid_argument("unknown quantity '" + s + "'");
}

Form parse_form(const std::string& s) {
  if (s == "sinpow") return Form::sinpow;
  if (s == "fourier") return Form::fourier;
  throw std::invalid_argument("unknown form '" + s + "'");
}

int window_nmin(Quantity q, Form f) {
  switch (q) {
    case Quantity::phi: return f == Form::sinpow ? 0 : 1;
    case Quantity::h: return f == Form::sinpow ? 1 : 0;
    case Quantity::sin: return 0;
    case Quantity::cos: return f == Form::sinpow ? 1 : 0;
  }
  throw std::logic_error("window_nmin: bad enum");
}

int window_kmin(Quantity q, Form /*f*/) { return q == Quantity::h ? 0 : 1; }

int window_lmin(Quantity q, Form f, int n, int k) {
  switch (q) {
    case Quantity::phi: return f == Form::sinpow ? std::max(n + 1, k) : std::max(n, k);
    case Quantity::h: return f == Form::sinpow ? std::max(n, k + 1) : std::max(std::max(n, 1), k + 1);
    case Quantity::sin: return std::max(n, k);
    case Quantity::cos: return std::max(n, k);
  }
  throw std::logic_error("window_lmin: bad enum");
}

int window_lmax(Quantity q, Form f, int n, int k) {
  if (f == Form::fourier) return -1;
  switch (q) {
    case Quantity::phi: return n + k;
    case Quantity::h: return n + k;
    case Quantity::sin: return n + k;
    case Quantity::cos: return n + k - 1;
  }
  throw std::logic_error("window_lmax: bad enum");
}

bool in_window(Quantity q, Form f, int n, int k, int l) {
  if (n < window_nmin(q, f) || k < window_kmin(q, f)) return false;
  if (l < window_lmin(q, f, n, k)) return false;
  int up = window_lmax(q, f, n, k);
  return up < 0 || l <= up;
}

void write_cache(const CoeffTensor& t, std::ostream& out) {
  const Bounds& b = t.bounds();
  out << "p2e-coeffs v1 " << quantity_name(t.quantity()) << ' ' << form_name(t.form()) << " N=" << b.n << " K=" << b.k
      << " L=" << b.l << '\n';
  for (const auto& [key, value] : t.entries()) {
    const auto& [n, k, l] = key;
    out << n << ' ' << k << ' ' << l << ' ' << value.to_string() << '\n';
  }
}

CoeffTensor read_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("cache: empty stream");
  std::istringstream hdr(line);
  std::string magic, version, qs, fs, nf, kf, lf;
  hdr >> magic >> version >> qs >> fs >> nf >> kf >> lf;
  if (magic != "p2e-coeffs" || version != "v1" || nf.rfind("N=", 0) != 0 || kf.rfind("K=", 0) != 0 ||
      lf.rfind("L=", 0) != 0)
    throw std::invalid_argument("cache: malformed header '" + line + "'");
  Bounds b{std::stoi(nf.substr(2)), std::stoi(kf.substr(2)), std::stoi(lf.substr(2))};
  if (b.n < 0 || b.k < 0 || b.l < 0) throw std::invalid_argument("cache: negative bounds");
  CoeffTensor t(parse_quantity(qs), parse_form(fs), b);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    int n, k, l;
    std::string value;
    if (!(row >> n >> k >> l >> value)) throw std::invalid_argument("cache: malformed entry '" + line + "'");
    if (!t.contains_index(n, k, l))
      throw std::invalid_argument("cache: entry (" + std::to_string(n) + "," + std::to_string(k) + "," +
                                  std::to_string(l) + ") outside structural window");
    t.set(n, k, l, Rational::from_string(value));
  }
  return t;
}

}  // namespace p2e
