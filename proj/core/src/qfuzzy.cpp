#include "gammaq/qfuzzy.hpp"

#include <algorithm>

#include "gammaq/errors.hpp"

namespace gammaq {

  QSet::QSet(std::vector<std::string> names)
      : QSet(make_symbols(std::move(names))) {}

  QSet::QSet(SymbolTablePtr names) : _names(std::move(names)) {
    if (!_names || _names->empty()) {
      throw InvalidSymbol("Q must be non-empty");
    }
  }

  QSet QSet::generated(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back("q" + std::to_string(i));
    }
    return QSet(std::move(names));
  }

  QFuzzySubset::QFuzzySubset(SymbolTablePtr domain, QSet qset, Grade fill)
      : _domain(std::move(domain)),
        _qset(std::move(qset)),
        _grades(_domain->size() * _qset.size(), fill) {}

  QFuzzySubset QFuzzySubset::from_values(SymbolTablePtr         domain,
                                         QSet                   qset,
                                         std::span<Grade const> per_element) {
    QFuzzySubset mu(std::move(domain), std::move(qset));
    if (per_element.size() != mu.domain_size()) {
      throw DomainMismatch("expected one grade per domain element");
    }
    for (std::size_t x = 0; x < mu.domain_size(); ++x) {
      for (std::size_t q = 0; q < mu.q_size(); ++q) {
        mu.set(x, q, per_element[x]);
      }
    }
    return mu;
  }

  bool QFuzzySubset::is_nonempty() const {
    return std::any_of(
        _grades.begin(), _grades.end(), [](Grade const& g) { return !g.is_zero(); });
  }

  void QFuzzySubset::require_compatible(QFuzzySubset const& other) const {
    if (!same_symbols(_domain, other._domain) || !(_qset == other._qset)) {
      throw DomainMismatch("Q-fuzzy subsets over different domains or Q");
    }
  }

  std::string QFuzzySubset::to_string() const {
    std::string out;
    for (std::size_t x = 0; x < domain_size(); ++x) {
      if (x != 0) {
        out += ' ';
      }
      out += _domain->name(x) + ':';
      if (q_size() == 1) {
        out += (*this)(x, 0).to_string();
        continue;
      }
      out += '(';
      for (std::size_t q = 0; q < q_size(); ++q) {
        if (q != 0) {
          out += ',';
        }
        out += (*this)(x, q).to_string();
      }
      out += ')';
    }
    return out;
  }

  CrispSubset level_set(QFuzzySubset const& mu, Grade const& t) {
    CrispSubset out(mu.domain());
    for (std::size_t x = 0; x < mu.domain_size(); ++x) {
      bool member = true;
      for (std::size_t q = 0; q < mu.q_size() && member; ++q) {
        member = mu(x, q) >= t;
      }
      if (member) {
        out.insert(x);
      }
    }
    return out;
  }

  std::vector<Grade> image(QFuzzySubset const& mu) {
    std::vector<Grade> out(mu.grades().begin(), mu.grades().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  namespace {

    void require_over_carrier(GammaSemigroup const& g, QFuzzySubset const& mu) {
      if (!same_symbols(mu.domain(), g.carrier_ptr())) {
        throw DomainMismatch(
            "Q-fuzzy subset is not over the carrier of the Γ-semigroup");
      }
    }

  }  // namespace

  FuzzyIdealCheck
  is_q_fuzzy_ideal(GammaSemigroup const& g, QFuzzySubset const& mu, Side side) {
    require_over_carrier(g, mu);
    if (!mu.is_nonempty()) {
      throw EmptyFuzzySubset("Q-fuzzy ideals are non-empty by definition");
    }
    bool const check_left  = side != Side::right;
    bool const check_right = side != Side::left;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t c = 0; c < g.gamma_size(); ++c) {
        for (std::size_t y = 0; y < g.size(); ++y) {
          auto const z = g.product(x, c, y);
          for (std::size_t q = 0; q < mu.q_size(); ++q) {
            if (check_left && mu(z, q) < mu(y, q)) {
              return {false, FuzzyIdealViolation{Side::left, x, c, y, q}};
            }
            if (check_right && mu(z, q) < mu(x, q)) {
              return {false, FuzzyIdealViolation{Side::right, x, c, y, q}};
            }
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  std::string describe(GammaSemigroup const&      g,
                       QFuzzySubset const&        mu,
                       FuzzyIdealViolation const& v) {
    auto const& S   = g.carrier();
    auto const  z   = g.product(v.x, v.gamma, v.y);
    auto const  ref = v.side == Side::left ? v.y : v.x;
    return std::string(to_string(v.side)) + " condition fails at (x,γ,y,q)=("
           + S.name(v.x) + "," + g.gamma().name(v.gamma) + "," + S.name(v.y)
           + "," + mu.qset().names().name(v.q) + "): μ(" + S.name(z) + ","
           + mu.qset().names().name(v.q) + ")=" + mu(z, v.q).to_string()
           + " < μ(" + S.name(ref) + "," + mu.qset().names().name(v.q)
           + ")=" + mu(ref, v.q).to_string();
  }

  QFuzzySubset characteristic(GammaSemigroup const& g,
                              CrispSubset const&    ideal,
                              QSet const&           q) {
    return two_valued(g, ideal, Grade::zero(), Grade::one(), q);
  }

  QFuzzySubset two_valued(GammaSemigroup const& g,
                          CrispSubset const&    ideal,
                          Grade const&          alpha,
                          Grade const&          beta,
                          QSet const&           q) {
    if (alpha > beta || beta.is_zero()) {
      throw GradeOrderViolation("two-valued subset needs α ≤ β and β ≠ 0, got α="
                                + alpha.to_string() + ", β=" + beta.to_string());
    }
    if (!same_symbols(ideal.universe(), g.carrier_ptr())) {
      throw DomainMismatch("subset is not over the carrier of the Γ-semigroup");
    }
    QFuzzySubset mu(g.carrier_ptr(), q, alpha);
    for (auto x : ideal.indices()) {
      for (std::size_t p = 0; p < q.size(); ++p) {
        mu.set(x, p, beta);
      }
    }
    return mu;
  }

  QFuzzySubset intersection(QFuzzySubset const& mu1, QFuzzySubset const& mu2) {
    mu1.require_compatible(mu2);
    QFuzzySubset out = mu1;
    auto         out_grades = out.grades();
    auto         other      = mu2.grades();
    for (std::size_t i = 0; i < out_grades.size(); ++i) {
      out_grades[i] = std::min(out_grades[i], other[i]);
    }
    return out;
  }

  bool includes(QFuzzySubset const& mu1, QFuzzySubset const& mu2) {
    mu1.require_compatible(mu2);
    auto a = mu1.grades();
    auto b = mu2.grades();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) {
        return false;
      }
    }
    return true;
  }

  Verdict check_characteristic_criterion(GammaSemigroup const& g,
                                         CrispSubset const&    ideal,
                                         QSet const&           q,
                                         Side                  side) {
    Verdict v;
    v.lhs      = is_ideal(g, ideal, side);
    auto chi   = characteristic(g, ideal, q);
    auto fuzzy = is_q_fuzzy_ideal(g, chi, side);
    v.rhs      = fuzzy.holds;
    if (!v.agrees()) {
      v.witness = "I=" + ideal.to_string() + " side=" + std::string(to_string(side))
                  + " crisp=" + (v.lhs ? "true" : "false")
                  + " fuzzy=" + (v.rhs ? "true" : "false");
      if (fuzzy.violation) {
        v.witness += "; " + describe(g, chi, *fuzzy.violation);
      }
    }
    return v;
  }

  Verdict check_level_criterion(GammaSemigroup const& g,
                                QFuzzySubset const&   mu,
                                Side                  side,
                                LevelThresholds       thresholds) {
    require_over_carrier(g, mu);
    if (!mu.is_nonempty()) {
      return Verdict::vacuous_case("empty Q-fuzzy subset");
    }
    Verdict v;
    auto    fuzzy = is_q_fuzzy_ideal(g, mu, side);
    v.lhs         = fuzzy.holds;

    std::vector<Grade> ts;
    if (thresholds == LevelThresholds::image) {
      ts = image(mu);
    } else {
      // Level sets only change at the per-element minima over Q.
      for (std::size_t x = 0; x < mu.domain_size(); ++x) {
        Grade m = Grade::one();
        for (std::size_t q = 0; q < mu.q_size(); ++q) {
          m = std::min(m, mu(x, q));
        }
        ts.push_back(m);
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }

    v.rhs = true;
    std::string rhs_witness;
    for (auto const& t : ts) {
      auto level = level_set(mu, t);
      if (level.empty()) {
        v.rhs       = false;
        rhs_witness = "level set at t=" + t.to_string() + " is empty";
        break;
      }
      if (!is_ideal(g, level, side)) {
        v.rhs       = false;
        rhs_witness = "level set at t=" + t.to_string() + " is "
                      + level.to_string() + ", not a "
                      + std::string(to_string(side)) + " ideal";
        break;
      }
    }
    if (!v.agrees()) {
      v.witness = "μ=" + mu.to_string() + " side=" + std::string(to_string(side))
                  + " fuzzy-ideal=" + (v.lhs ? "true" : "false")
                  + " level-sets=" + (v.rhs ? "true" : "false");
      if (fuzzy.violation) {
        v.witness += "; " + describe(g, mu, *fuzzy.violation);
      }
      if (!rhs_witness.empty()) {
        v.witness += "; " + rhs_witness;
      }
    }
    return v;
  }

  std::optional<std::uint64_t> assignment_count(std::size_t grid_size,
                                                std::size_t cells) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      if (grid_size != 0 && total > UINT64_MAX / grid_size) {
        return std::nullopt;
      }
      total *= grid_size;
    }
    return total;
  }

  FuzzySubsetRange::iterator::iterator(FuzzySubsetRange const* range)
      : _range(range) {
    if (range->_grid.empty()) {
      return;
    }
    auto cells = range->_domain->size() * range->_qset.size();
    _digits.assign(cells, 0);
    _current.emplace(range->_domain, range->_qset, range->_grid.front());
  }

  FuzzySubsetRange::iterator& FuzzySubsetRange::iterator::operator++() {
    auto const& grid   = _range->_grid;
    auto        grades = _current->grades();
    // Odometer with the last cell turning fastest.
    for (std::size_t i = _digits.size(); i-- > 0;) {
      if (++_digits[i] < grid.size()) {
        grades[i] = grid[_digits[i]];
        return *this;
      }
      _digits[i] = 0;
      grades[i]  = grid.front();
    }
    _current.reset();
    return *this;
  }

  std::uint64_t FuzzySubsetRange::count() const {
    return assignment_count(_grid.size(), _domain->size() * _qset.size())
        .value_or(UINT64_MAX);
  }

  std::vector<QFuzzySubset> FuzzySubsetRange::collect() const {
    std::vector<QFuzzySubset> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (auto it = begin(); it != end(); ++it) {
      out.push_back(*it);
    }
    return out;
  }

  FuzzySubsetRange enumerate_q_fuzzy_subsets(SymbolTablePtr     domain,
                                             QSet const&        q,
                                             std::vector<Grade> grid,
                                             std::uint64_t      bound) {
    auto cells = domain->size() * q.size();
    auto total = assignment_count(grid.size(), cells);
    if (!total || *total > bound) {
      throw BoundExceeded(std::to_string(grid.size()) + "^"
                          + std::to_string(cells)
                          + " Q-fuzzy subsets exceed the enumeration bound of "
                          + std::to_string(bound));
    }
    return FuzzySubsetRange(std::move(domain), q, std::move(grid));
  }

}  // namespace gammaq
