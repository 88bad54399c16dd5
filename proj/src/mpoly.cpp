#include "holocert/mpoly.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>

namespace holocert {

namespace {

int variable_rank(const std::string& v) {
  if (v == vars::w) return 1;
  if (v == vars::beta2) return 2;
  if (v == vars::beta1) return 3;
  if (v == vars::beta0) return 4;
  return 0;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), variable_precedes);
  return out;
}

void add_term(MPoly::TermMap& m, const MPoly::Exponents& e, const GR& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

bool is_negative(const GR& c) { return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0); }

}  // namespace

bool variable_precedes(const std::string& a, const std::string& b) {
  const int ra = variable_rank(a);
  const int rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool MPoly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MPoly::MPoly(GR c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

MPoly::MPoly(long c) : MPoly(GR(c)) {}

MPoly::MPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  prune();
}

MPoly MPoly::variable(const std::string& name) {
  TermMap t;
  t.emplace(Exponents{1}, GR(1));
  return {{name}, std::move(t)};
}

MPoly MPoly::monomial(GR c, const std::vector<std::pair<std::string, unsigned>>& powers) {
  MPoly out(std::move(c));
  for (const auto& [v, e] : powers) out *= variable(v).pow(e);
  return out;
}

MPoly MPoly::from_coefficients(const std::string& var, const std::vector<MPoly>& coeffs) {
  MPoly out;
  const MPoly x = variable(var);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    out *= x;
    out += coeffs[k];
  }
  return out;
}

bool MPoly::has_var(const std::string& var) const {
  return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

GR MPoly::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
  return constant_term();
}

GR MPoly::constant_term() const {
  const Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? GR(0) : it->second;
}

unsigned MPoly::degree(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto j = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[j]);
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

unsigned MPoly::degree_in(const std::vector<std::string>& names) const {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    if (std::find(names.begin(), names.end(), vars_[j]) != names.end()) idx.push_back(j);
  }
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto j : idx) s += e[j];
    d = std::max(d, s);
  }
  return d;
}

MPoly MPoly::coeff(const std::string& var, unsigned k) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return k == 0 ? *this : MPoly();
  const auto j = static_cast<std::size_t>(it - vars_.begin());
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[j] != k) continue;
    Exponents f = e;
    f[j] = 0;
    out.emplace(std::move(f), c);
  }
  return {vars_, std::move(out)};
}

std::vector<MPoly> MPoly::coefficients(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {*this};
  const auto j = static_cast<std::size_t>(it - vars_.begin());
  std::vector<TermMap> parts(degree(var) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[j] = 0;
    parts[e[j]].emplace(std::move(f), c);
  }
  std::vector<MPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(MPoly(vars_, std::move(p)));
  return out;
}

MPoly MPoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {};
  const auto j = static_cast<std::size_t>(it - vars_.begin());
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponents f = e;
    f[j] -= 1;
    add_term(out, f, c * GR(static_cast<long>(e[j])));
  }
  return {vars_, std::move(out)};
}

MPoly MPoly::substitute(const std::string& var, const MPoly& value) const {
  if (!has_var(var)) return *this;
  const std::vector<MPoly> cs = coefficients(var);
  MPoly out;
  for (std::size_t k = cs.size(); k-- > 0;) {
    out *= value;
    out += cs[k];
  }
  return out;
}

MPoly MPoly::substitute(const std::map<std::string, GR>& values) const {
  std::vector<std::string> keep;
  std::vector<std::size_t> keep_idx;
  std::vector<std::pair<std::size_t, const GR*>> bound;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    auto it = values.find(vars_[j]);
    if (it == values.end()) {
      keep.push_back(vars_[j]);
      keep_idx.push_back(j);
    } else {
      bound.emplace_back(j, &it->second);
    }
  }
  if (bound.empty()) return *this;
  TermMap out;
  for (const auto& [e, c] : terms_) {
    GR v = c;
    for (const auto& [j, val] : bound) {
      if (e[j] != 0) v *= val->pow(e[j]);
    }
    Exponents f;
    f.reserve(keep_idx.size());
    for (auto j : keep_idx) f.push_back(e[j]);
    add_term(out, f, v);
  }
  return {std::move(keep), std::move(out)};
}

GR MPoly::evaluate(const std::map<std::string, GR>& point) const {
  for (const auto& v : vars_) {
    if (point.find(v) == point.end()) throw MissingBinding(v);
  }
  return substitute(point).constant_term();
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

std::pair<MPoly::Exponents, GR> MPoly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly::TermMap MPoly::aligned_terms(const std::vector<std::string>& target) const {
  if (target == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    pos[j] = static_cast<std::size_t>(std::find(target.begin(), target.end(), vars_[j]) - target.begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t j = 0; j < e.size(); ++j) f[pos[j]] = e[j];
    out.emplace(std::move(f), c);
  }
  return out;
}

void MPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j) used[j] = used[j] || e[j] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> keep;
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    if (used[j]) keep.push_back(vars_[j]);
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f;
    f.reserve(keep.size());
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (used[j]) f.push_back(e[j]);
    }
    out.emplace(std::move(f), c);
  }
  vars_ = std::move(keep);
  terms_ = std::move(out);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.vars_ != vars_) {
    std::vector<std::string> u = merge_vars(vars_, o.vars_);
    terms_ = aligned_terms(u);
    vars_ = std::move(u);
  }
  const TermMap other = o.aligned_terms(vars_);
  for (const auto& [e, c] : other) add_term(terms_, e, c);
  prune();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::string> u = merge_vars(a.vars_, b.vars_);
  const MPoly::TermMap ta = a.aligned_terms(u);
  const MPoly::TermMap tb = b.aligned_terms(u);
  MPoly::TermMap out;
  MPoly::Exponents e(u.size(), 0);
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      add_term(out, e, ca * cb);
    }
  }
  return {std::move(u), std::move(out)};
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const GR& c) {
  if (c.is_zero()) {
    vars_.clear();
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly& MPoly::operator/=(const GR& c) {
  if (c.is_zero()) throw DivisionByZero();
  return *this *= c.inv();
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = is_negative(c);
    const GR mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[j];
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += mag.to_compact_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_compact_string() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

DivisionResult divide(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  const std::vector<std::string> u = merge_vars(f.vars_, g.vars_);
  MPoly::TermMap p = f.aligned_terms(u);
  const MPoly::TermMap gt = g.aligned_terms(u);
  const auto& [lead_e, lead_c] = *gt.rbegin();
  const GR lead_inv = lead_c.inv();

  MPoly::TermMap q;
  MPoly::TermMap r;
  MPoly::Exponents t(u.size(), 0);
  MPoly::Exponents s(u.size(), 0);
  while (!p.empty()) {
    auto top = std::prev(p.end());
    const MPoly::Exponents e = top->first;
    const GR c = top->second;
    bool divisible = true;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (e[j] < lead_e[j]) {
        divisible = false;
        break;
      }
      t[j] = e[j] - lead_e[j];
    }
    if (!divisible) {
      add_term(r, e, c);
      p.erase(top);
      continue;
    }
    const GR k = c * lead_inv;
    add_term(q, t, k);
    for (const auto& [eg, cg] : gt) {
      for (std::size_t j = 0; j < u.size(); ++j) s[j] = t[j] + eg[j];
      add_term(p, s, -(k * cg));
    }
  }
  return {MPoly(u, std::move(q)), MPoly(u, std::move(r))};
}

MPoly exact_div(const MPoly& f, const MPoly& g) {
  DivisionResult d = divide(f, g);
  if (!d.remainder.is_zero()) throw ExactDivisionError(std::move(d.remainder));
  return std::move(d.quotient);
}

}  // namespace holocert
