// Word rewriting systems over a free algebra: normal forms, ambiguities and
// bounded completion in the style of Bergman's diamond lemma.

#ifndef FULCRUM_REWRITE_HPP_
#define FULCRUM_REWRITE_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fulcrum/ncpoly.hpp"

namespace fulcrum {

  /// lead -> tail, every word of tail strictly below lead.
  struct RewriteRule {
    Word   lead;
    NcPoly tail;

    // lead - tail
    NcPoly as_poly() const;
  };

  class reduction_budget_exceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  class order_violation : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  /// Overlap (lead1 = A·B, lead2 = B·C) or inclusion (lead1 = A·lead2·C)
  /// between two rules; the ambiguous word is A·B·C resp. lead1.
  struct Ambiguity {
    std::size_t rule1;
    std::size_t rule2;
    Word        a, b, c;
    bool        inclusion = false;

    Word word() const { return a * b * c; }
  };

  /// FULCRUM_DEGREE_CAP if set to a positive integer, else 8.
  std::size_t configured_degree_cap();

  class ReductionSystem {
   public:
    static constexpr std::size_t default_degree_cap = 8;

    explicit ReductionSystem(RingPtr ring,
                             std::size_t degree_cap = configured_degree_cap());

    ReductionSystem(ReductionSystem const& other);
    ReductionSystem& operator=(ReductionSystem const& other);
    ReductionSystem(ReductionSystem&&) noexcept            = default;
    ReductionSystem& operator=(ReductionSystem&&) noexcept = default;

    /// Orient each relation (largest word becomes the monic lead) and
    /// inter-reduce, without resolving ambiguities.
    static ReductionSystem from_relations(RingPtr                    ring,
                                          std::vector<NcPoly> const& relations,
                                          std::size_t degree_cap
                                          = configured_degree_cap());

    RingPtr const&                  ring() const noexcept { return _ring; }
    std::vector<RewriteRule> const& rules() const noexcept { return _rules; }
    std::size_t degree_cap() const noexcept { return _degree_cap; }
    void        set_degree_cap(std::size_t cap) { _degree_cap = cap; }

    /// Adds a rule as is. Throws order_violation if the tail is not below
    /// the lead, and std::invalid_argument on a duplicate lead.
    void add_rule(RewriteRule rule);

    /// Reduce, orient and insert a relation, removing rules whose leads
    /// become reducible and re-inserting their relations. Returns the
    /// rules created, or nullopt if the relation collapses the algebra
    /// (a nonzero constant was derived).
    std::optional<std::vector<RewriteRule>> add_relation(NcPoly const& p);

    /// True if the empty word is a lead, i.e. 1 = 0.
    bool collapsed() const;

    /// Index of a rule whose lead occurs in w, and the leftmost position.
    std::optional<std::pair<std::size_t, std::size_t>>
    find_lead(Word const& w) const;
    bool is_irreducible(Word const& w) const { return !find_lead(w); }

    NcPoly normal_form(NcPoly const& p) const;
    NcPoly normal_form(Word const& w) const;

    /// Normalise every tail with respect to the other rules.
    void reduce_tails();

    std::size_t max_lead_length() const;

    std::string to_string() const;

   private:
    NcPoly nf_word(Word const& w, std::size_t& budget) const;
    void   rebuild_index();
    void   clear_memo() const;

    struct Memo {
      std::mutex                                      mutex;
      std::unordered_map<Word, NcPoly, WordHash>      table;
    };

    RingPtr                                          _ring;
    std::size_t                                      _degree_cap;
    std::vector<RewriteRule>                         _rules;
    std::unordered_map<Word, std::size_t, WordHash>  _lead_index;
    std::vector<std::size_t>                         _lead_lengths;
    std::unique_ptr<Memo>                            _memo;
  };

  NcPoly normal_form(NcPoly const& p, ReductionSystem const& sys);

  /// All overlap and inclusion ambiguities whose ambiguous word has length
  /// at most the system's degree cap.
  std::vector<Ambiguity> find_ambiguities(ReductionSystem const& sys);

  /// The two one-step resolutions of an ambiguity, reduced to normal form
  /// and subtracted.
  NcPoly ambiguity_difference(ReductionSystem const& sys, Ambiguity const& amb);

  enum class CompletionStatus { confluent, collapsed_to_zero, cap_exceeded };

  std::string to_string(CompletionStatus s);

  struct CompletionReport {
    CompletionStatus         status;
    ReductionSystem          system;
    std::vector<RewriteRule> new_rules;
    std::size_t              ambiguities_checked = 0;
    // Ambiguities longer than the degree cap (resolved all the same).
    std::size_t ambiguities_beyond_cap = 0;
  };

  /// Resolve ambiguities smallest-word-first, orienting every nonzero
  /// difference into a new rule.
  CompletionReport complete(ReductionSystem sys);

  /// Independent re-check: every ambiguity within the cap resolves.
  bool is_locally_confluent(ReductionSystem const& sys);

  struct IrreducibleCounts {
    std::vector<std::size_t> per_length;
    std::size_t              total  = 0;
    bool                     finite = false;
  };

  IrreducibleCounts count_irreducible(ReductionSystem const& sys,
                                      std::size_t            max_len);

  /// Irreducible words up to max_len, ascending in the ring's order.
  std::vector<Word> irreducible_words(ReductionSystem const& sys,
                                      std::size_t            max_len);

}  // namespace fulcrum

#endif  // FULCRUM_REWRITE_HPP_
