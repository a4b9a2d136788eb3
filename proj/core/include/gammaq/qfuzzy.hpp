#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammaq/crisp_subset.hpp"
#include "gammaq/gamma_semigroup.hpp"
#include "gammaq/grade.hpp"
#include "gammaq/symbol_table.hpp"
#include "gammaq/verdict.hpp"

namespace gammaq {

  // The non-empty parameter set Q.
  class QSet {
   public:
    // Throws InvalidSymbol when names is empty or invalid.
    explicit QSet(std::vector<std::string> names);
    explicit QSet(SymbolTablePtr names);

    // {q1, ..., qn}
    static QSet generated(std::size_t n);

    std::size_t size() const noexcept {
      return _names->size();
    }

    SymbolTable const& names() const noexcept {
      return *_names;
    }

    SymbolTablePtr const& ptr() const noexcept {
      return _names;
    }

    bool operator==(QSet const& other) const {
      return same_symbols(_names, other._names);
    }

   private:
    SymbolTablePtr _names;
  };

  // A total map domain × Q → [0,1]. Cell (x, q) lives at x * |Q| + q.
  class QFuzzySubset {
   public:
    QFuzzySubset(SymbolTablePtr domain, QSet qset, Grade fill = Grade::zero());

    static QFuzzySubset constant(SymbolTablePtr domain, QSet qset, Grade c) {
      return QFuzzySubset(std::move(domain), std::move(qset), c);
    }

    // Grades listed per element (each repeated over all of Q).
    static QFuzzySubset from_values(SymbolTablePtr          domain,
                                    QSet                    qset,
                                    std::span<Grade const> per_element);

    Grade const& operator()(std::size_t x, std::size_t q) const {
      return _grades[x * _qset.size() + q];
    }

    void set(std::size_t x, std::size_t q, Grade g) {
      _grades.at(x * _qset.size() + q) = g;
    }

    std::size_t domain_size() const noexcept {
      return _domain->size();
    }

    std::size_t q_size() const noexcept {
      return _qset.size();
    }

    SymbolTablePtr const& domain() const noexcept {
      return _domain;
    }

    QSet const& qset() const noexcept {
      return _qset;
    }

    std::span<Grade const> grades() const noexcept {
      return _grades;
    }

    std::span<Grade> grades() noexcept {
      return _grades;
    }

    // Some (x, q) has a positive grade.
    bool is_nonempty() const;

    // Same domain and Q; throws DomainMismatch otherwise.
    void require_compatible(QFuzzySubset const& other) const;

    // "a:4/5 b:7/10" for |Q| = 1, "a:(1/2,1/1)" otherwise.
    std::string to_string() const;

    bool operator==(QFuzzySubset const& other) const {
      return _grades == other._grades && same_symbols(_domain, other._domain)
             && _qset == other._qset;
    }

   private:
    SymbolTablePtr     _domain;
    QSet               _qset;
    std::vector<Grade> _grades;
  };

  // {x : μ(x,q) ≥ t for every q}
  CrispSubset level_set(QFuzzySubset const& mu, Grade const& t);

  // Sorted distinct grades attained.
  std::vector<Grade> image(QFuzzySubset const& mu);

  // Offending instance of the fuzzy ideal inequality: for the left
  // condition μ(xγy,q) < μ(y,q), for the right condition μ(xγy,q) < μ(x,q).
  struct FuzzyIdealViolation {
    Side        side;
    std::size_t x;
    std::size_t gamma;
    std::size_t y;
    std::size_t q;
  };

  struct FuzzyIdealCheck {
    bool                               holds = false;
    std::optional<FuzzyIdealViolation> violation;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Throws EmptyFuzzySubset when mu has no positive grade and
  // DomainMismatch when mu is not over the carrier of g.
  FuzzyIdealCheck
  is_q_fuzzy_ideal(GammaSemigroup const& g, QFuzzySubset const& mu, Side side);

  std::string describe(GammaSemigroup const&      g,
                       QFuzzySubset const&        mu,
                       FuzzyIdealViolation const& v);

  // χ of I×Q.
  QFuzzySubset characteristic(GammaSemigroup const& g,
                              CrispSubset const&    ideal,
                              QSet const&           q);

  // β on I×Q, α elsewhere. Throws GradeOrderViolation unless α ≤ β and
  // β ≠ 0.
  QFuzzySubset two_valued(GammaSemigroup const& g,
                          CrispSubset const&    ideal,
                          Grade const&          alpha,
                          Grade const&          beta,
                          QSet const&           q);

  // Pointwise minimum.
  QFuzzySubset intersection(QFuzzySubset const& mu1, QFuzzySubset const& mu2);

  // μ1 ⊆ μ2, i.e. μ1 ≤ μ2 pointwise.
  bool includes(QFuzzySubset const& mu1, QFuzzySubset const& mu2);

  // Compares is_ideal(I) with is_q_fuzzy_ideal(χ_{I×Q}).
  Verdict check_characteristic_criterion(GammaSemigroup const& g,
                                         CrispSubset const&    ideal,
                                         QSet const&           q,
                                         Side                  side);

  enum class LevelThresholds {
    // t ranges over Im(μ); an empty level set counts against the rhs.
    image,
    // t ranges over every value in [0,1] with a non-empty level set.
    all_nonempty
  };

  // Compares is_q_fuzzy_ideal(μ) with "every level set is an ideal".
  // Empty μ is reported as vacuous.
  Verdict check_level_criterion(GammaSemigroup const& g,
                                QFuzzySubset const&   mu,
                                Side                  side,
                                LevelThresholds       thresholds
                                = LevelThresholds::image);

  inline constexpr std::uint64_t default_fuzzy_bound = 1'000'000;

  // Every assignment domain × Q → grid, in lexicographic order with cell 0
  // (element 0, q 0) most significant.
  class FuzzySubsetRange {
   public:
    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = QFuzzySubset;
      using difference_type   = std::ptrdiff_t;

      iterator() = default;
      explicit iterator(FuzzySubsetRange const* range);

      QFuzzySubset const& operator*() const {
        return *_current;
      }

      QFuzzySubset const* operator->() const {
        return &*_current;
      }

      iterator& operator++();

      void operator++(int) {
        ++*this;
      }

      bool operator==(std::default_sentinel_t) const {
        return !_current.has_value();
      }

     private:
      FuzzySubsetRange const*     _range = nullptr;
      std::vector<std::size_t>    _digits;
      std::optional<QFuzzySubset> _current;
    };

    FuzzySubsetRange(SymbolTablePtr domain, QSet qset, std::vector<Grade> grid)
        : _domain(std::move(domain)),
          _qset(std::move(qset)),
          _grid(std::move(grid)) {}

    iterator begin() const {
      return iterator(this);
    }

    std::default_sentinel_t end() const {
      return {};
    }

    std::uint64_t count() const;

    std::vector<QFuzzySubset> collect() const;

   private:
    friend class iterator;

    SymbolTablePtr     _domain;
    QSet               _qset;
    std::vector<Grade> _grid;
  };

  // Throws BoundExceeded when |grid|^(|domain|·|Q|) > bound.
  FuzzySubsetRange enumerate_q_fuzzy_subsets(SymbolTablePtr     domain,
                                             QSet const&        q,
                                             std::vector<Grade> grid,
                                             std::uint64_t bound
                                             = default_fuzzy_bound);

  inline FuzzySubsetRange enumerate_q_fuzzy_subsets(GammaSemigroup const& g,
                                                    QSet const&           q,
                                                    std::vector<Grade>    grid,
                                                    std::uint64_t         bound
                                                    = default_fuzzy_bound) {
    return enumerate_q_fuzzy_subsets(g.carrier_ptr(), q, std::move(grid), bound);
  }

  // Exact count |grid|^cells, or nullopt past 2^64.
  std::optional<std::uint64_t> assignment_count(std::size_t grid_size,
                                                std::size_t cells);

}  // namespace gammaq
