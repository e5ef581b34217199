#include "skein4/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skein4 {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  long da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

RingSpecPtr RingSpec::create(std::vector<std::string> vars,
                             std::vector<std::string> laurent, Int modulus) {
  auto spec = std::make_shared<RingSpec>();
  spec->vars_ = std::move(vars);
  for (size_t i = 0; i < spec->vars_.size(); ++i)
    for (size_t j = i + 1; j < spec->vars_.size(); ++j)
      if (spec->vars_[i] == spec->vars_[j]) throw RingError("duplicate variable name");
  spec->laurent_.assign(spec->vars_.size(), false);
  for (const auto& name : laurent) {
    int i = spec->var_index(name);
    if (i < 0) throw RingError("laurent variable not declared: " + name);
    spec->laurent_[size_t(i)] = true;
  }
  if (modulus < 0) throw RingError("modulus must be nonnegative");
  spec->modulus_ = std::move(modulus);
  return spec;
}

RingSpecPtr RingSpec::create_with_power_rule(std::vector<std::string> vars,
                                             std::vector<std::string> laurent,
                                             const std::string& rule_var, int power,
                                             Int rhs_constant, Int modulus) {
  auto base = create(std::move(vars), std::move(laurent), std::move(modulus));
  auto spec = std::const_pointer_cast<RingSpec>(base);
  PowerRule rule;
  rule.var = spec->require_var(rule_var);
  if (power < 1) throw RingError("rule power must be >= 1");
  rule.power = power;
  rule.unit_rhs = (rhs_constant == 1);
  if (rhs_constant != 0)
    rule.rhs.emplace(Exponents(size_t(spec->nvars()), 0), rhs_constant);
  spec->rules_.push_back(std::move(rule));
  return spec;
}

int RingSpec::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return int(i);
  return -1;
}

int RingSpec::require_var(const std::string& name) const {
  int i = var_index(name);
  if (i < 0) throw RingError("unknown variable: " + name);
  return i;
}

bool RingSpec::invertible(int i) const {
  if (laurent_[size_t(i)]) return true;
  const PowerRule* r = rule_for(i);
  return r != nullptr && r->unit_rhs;
}

const RingSpec::PowerRule* RingSpec::rule_for(int var) const {
  for (const auto& r : rules_)
    if (r.var == var) return &r;
  return nullptr;
}

bool RingSpec::same_as(const RingSpec& o) const {
  if (this == &o) return true;
  if (vars_ != o.vars_ || laurent_ != o.laurent_ || modulus_ != o.modulus_) return false;
  if (rules_.size() != o.rules_.size()) return false;
  for (size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].var != o.rules_[i].var || rules_[i].power != o.rules_[i].power ||
        rules_[i].rhs != o.rules_[i].rhs)
      return false;
  }
  return true;
}

static void check_same_spec(const RingElement& a, const RingElement& b) {
  if (!a.valid() || !b.valid()) throw RingError("operation on invalid element");
  if (a.spec().get() != b.spec().get() && !a.spec()->same_as(*b.spec()))
    throw RingError("mixed ring specs");
}

RingElement RingElement::zero(RingSpecPtr spec) { return RingElement(std::move(spec), {}); }

RingElement RingElement::one(RingSpecPtr spec) { return integer(std::move(spec), 1); }

RingElement RingElement::integer(RingSpecPtr spec, Int c) {
  TermMap t;
  t.emplace(Exponents(size_t(spec->nvars()), 0), std::move(c));
  return normalized(std::move(spec), t);
}

RingElement RingElement::variable(RingSpecPtr spec, const std::string& name, int exp) {
  return monomial(std::move(spec), 1, {{name, exp}});
}

RingElement RingElement::monomial(RingSpecPtr spec, Int c,
                                  const std::vector<std::pair<std::string, int>>& pows) {
  Exponents e(size_t(spec->nvars()), 0);
  for (const auto& [name, k] : pows) e[size_t(spec->require_var(name))] += k;
  TermMap t;
  t.emplace(std::move(e), std::move(c));
  return normalized(std::move(spec), t);
}

RingElement RingElement::normalized(RingSpecPtr spec, const TermMap& raw) {
  TermMap n = normalize(*spec, raw, /*reject_negative=*/true);
  return RingElement(std::move(spec), std::move(n));
}

void RingElement::add_term(TermMap& acc, const Exponents& e, const Int& c) {
  auto it = acc.find(e);
  if (it == acc.end()) {
    if (c != 0) acc.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

TermMap RingElement::normalize(const RingSpec& spec, TermMap raw, bool reject_negative) {
  TermMap out;
  // Worklist: rules with non-unit rhs can fan a term out into several.
  std::vector<std::pair<Exponents, Int>> work(raw.begin(), raw.end());
  while (!work.empty()) {
    auto [e, c] = std::move(work.back());
    work.pop_back();
    if (spec.modulus_ != 0) {
      c %= spec.modulus_;
      if (c < 0) c += spec.modulus_;
    }
    if (c == 0) continue;
    bool requeued = false;
    for (int v = 0; v < spec.nvars(); ++v) {
      const auto* rule = spec.rule_for(v);
      int& ev = e[size_t(v)];
      if (rule != nullptr) {
        if (rule->unit_rhs) {
          ev = ((ev % rule->power) + rule->power) % rule->power;
        } else if (ev >= rule->power) {
          // e = e' * v^power with e' = e - power; multiply by rhs and requeue.
          Exponents base = e;
          base[size_t(v)] -= rule->power;
          for (const auto& [re, rc] : rule->rhs) {
            Exponents ne = base;
            for (size_t k = 0; k < ne.size(); ++k) ne[k] += re[k];
            work.emplace_back(std::move(ne), c * rc);
          }
          requeued = true;
          break;
        }
      }
      if (ev < 0 && !spec.invertible(v)) {
        if (reject_negative)
          throw RingError("negative exponent on non-invertible variable " +
                          spec.var_name(v));
      }
    }
    if (!requeued) add_term(out, e, c);
  }
  return out;
}

bool RingElement::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_spec(*this, o);
  TermMap acc = terms_;
  for (const auto& [e, c] : o.terms_) add_term(acc, e, c);
  return RingElement(spec_, normalize(*spec_, std::move(acc), false));
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
  if (!valid()) throw RingError("operation on invalid element");
  TermMap acc;
  for (const auto& [e, c] : terms_) acc.emplace(e, -c);
  return RingElement(spec_, normalize(*spec_, std::move(acc), false));
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same_spec(*this, o);
  TermMap acc;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      add_term(acc, e, c1 * c2);
    }
  }
  return RingElement(spec_, normalize(*spec_, std::move(acc), false));
}

bool RingElement::operator==(const RingElement& o) const {
  check_same_spec(*this, o);
  return terms_ == o.terms_;
}

RingElement RingElement::scaled(const Int& c) const {
  TermMap acc;
  for (const auto& [e, k] : terms_) acc.emplace(e, k * c);
  return RingElement(spec_, normalize(*spec_, std::move(acc), false));
}

RingElement RingElement::pow(long e) const {
  if (!valid()) throw RingError("operation on invalid element");
  if (e < 0) {
    auto inv = unit_inverse();
    if (!inv) throw RingError("negative power of a non-unit");
    return inv->pow(-e);
  }
  RingElement acc = one(spec_);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::optional<RingElement> RingElement::unit_inverse() const {
  if (!valid() || terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (size_t v = 0; v < e.size(); ++v)
    if (e[v] != 0 && !spec_->invertible(int(v))) return std::nullopt;
  Int cinv;
  if (c == 1) {
    cinv = 1;
  } else if (c == spec_->modulus() - 1 || (spec_->modulus() == 0 && c == -1)) {
    cinv = -1;
  } else if (spec_->modulus() != 0) {
    // Search the small modulus for an inverse.
    cinv = 0;
    for (Int k = 1; k < spec_->modulus(); ++k)
      if ((k * c) % spec_->modulus() == 1) {
        cinv = k;
        break;
      }
    if (cinv == 0) return std::nullopt;
  } else {
    return std::nullopt;
  }
  Exponents ne = e;
  for (auto& x : ne) x = -x;
  TermMap t;
  t.emplace(std::move(ne), std::move(cinv));
  return RingElement(spec_, normalize(*spec_, std::move(t), false));
}

int RingElement::degree_in(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int ev = e[size_t(var)];
    if (first || ev > d) d = ev;
    first = false;
  }
  return d;
}

int RingElement::min_exp(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int ev = e[size_t(var)];
    if (first || ev < d) d = ev;
    first = false;
  }
  return d;
}

std::optional<RingElement> RingElement::exact_div(const RingElement& num,
                                                  const RingElement& den) {
  check_same_spec(num, den);
  auto spec = num.spec();
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return zero(spec);
  // Strip monomial content so both sides are honest polynomials, divide, and
  // put the monomial factor back (it must land on invertible variables).
  Exponents shift(size_t(spec->nvars()), 0);
  auto strip = [&](const RingElement& p, int sign) {
    Exponents m = p.terms_.begin()->first;
    for (const auto& [e, c] : p.terms_) {
      (void)c;
      for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
    }
    TermMap t;
    for (const auto& [e, c] : p.terms_) {
      Exponents ne = e;
      for (size_t k = 0; k < ne.size(); ++k) ne[k] -= m[k];
      t.emplace(std::move(ne), c);
    }
    for (size_t k = 0; k < m.size(); ++k) shift[k] += sign * m[k];
    return RingElement(spec, std::move(t));
  };
  RingElement n = strip(num, +1);
  RingElement d = strip(den, -1);
  for (size_t k = 0; k < shift.size(); ++k)
    if (shift[k] < 0 && !spec->invertible(int(k))) return std::nullopt;

  TermMap q;
  RingElement r = n;
  const auto& dlead = *d.terms_.rbegin();  // grlex-largest
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.rbegin();
    Exponents qe = rlead.first;
    bool divisible = true;
    for (size_t k = 0; k < qe.size(); ++k) {
      qe[k] -= dlead.first[k];
      if (qe[k] < 0) divisible = false;
    }
    if (!divisible) return std::nullopt;
    Int qc;
    if (spec->modulus() == 0) {
      if (rlead.second % dlead.second != 0) return std::nullopt;
      qc = rlead.second / dlead.second;
    } else {
      RingElement lc = integer(spec, dlead.second);
      auto lcinv = lc.unit_inverse();
      if (!lcinv) return std::nullopt;
      qc = rlead.second * lcinv->terms_.begin()->second;
    }
    TermMap qt;
    qt.emplace(qe, qc);
    RingElement qterm(spec, normalize(*spec, std::move(qt), false));
    add_term(q, qe, qc);
    r = r - qterm * d;
  }
  TermMap sh;
  sh.emplace(shift, Int(1));
  RingElement shift_el(spec, normalize(*spec, std::move(sh), false));
  return RingElement(spec, normalize(*spec, std::move(q), false)) * shift_el;
}

RingElement RingElement::substituted(const std::map<std::string, RingElement>& bindings,
                                     RingSpecPtr target) const {
  if (!valid()) throw RingError("operation on invalid element");
  std::vector<const RingElement*> image(size_t(spec_->nvars()), nullptr);
  for (const auto& [name, val] : bindings) {
    int i = spec_->var_index(name);
    if (i < 0) throw RingError("binding for unknown variable: " + name);
    if (!val.spec()->same_as(*target)) throw RingError("binding not in target ring");
    image[size_t(i)] = &val;
  }
  RingElement acc = zero(target);
  for (const auto& [e, c] : terms_) {
    RingElement term = integer(target, c);
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (image[v] == nullptr)
        throw RingError("unbound variable in substitution: " + spec_->var_name(int(v)));
      if (e[v] < 0 && !image[v]->unit_inverse())
        throw RingError("substitution needs a unit image for " + spec_->var_name(int(v)));
      term *= image[v]->pow(e[v]);
    }
    acc += term;
  }
  return acc;
}

std::string RingElement::str() const {
  if (!valid()) return "<invalid>";
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (!any_var) {
      os << a;
      continue;
    }
    os << a;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      os << "*" << spec_->var_name(int(v));
      if (e[v] != 1) os << "^" << e[v];
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser for the polynomial text format, plus parentheses.
class PolyParser {
 public:
  PolyParser(RingSpecPtr spec, const std::string& s) : spec_(std::move(spec)), s_(s) {}

  RingElement parse() {
    RingElement v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  RingElement expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    RingElement acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      RingElement t = term();
      acc = (c == '-') ? acc - t : acc + t;
    }
    return acc;
  }

  RingElement term() {
    RingElement acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc *= factor();
    }
    return acc;
  }

  RingElement factor() {
    RingElement base = primary();
    skip_ws();
    if (peek() == '^') {
      get();
      long e = integer_lit();
      base = base.pow(e);
    }
    return base;
  }

  RingElement primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      RingElement v = expr();
      skip_ws();
      if (get() != ')') fail("expected ')'");
      return v;
    }
    if (c == '-') {
      get();
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RingElement::integer(spec_, Int(number_lit()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      if (spec_->var_index(name) < 0) fail("unknown variable '" + name + "'");
      return RingElement::variable(spec_, name);
    }
    fail("unexpected character");
    return RingElement();  // unreachable
  }

  long integer_lit() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      get();
      neg = true;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = std::stol(number_lit());
    return neg ? -v : v;
  }

  std::string number_lit() {
    std::string n;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      n += s_[pos_++];
    return n;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) {
    throw RingError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                    msg);
  }

  RingSpecPtr spec_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

RingElement RingElement::parse(RingSpecPtr spec, const std::string& text) {
  return PolyParser(std::move(spec), text).parse();
}

}  // namespace skein4
