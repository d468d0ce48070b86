#include "fulcrum/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

namespace fulcrum {

  std::size_t configured_degree_cap() {
    char const* env = std::getenv("FULCRUM_DEGREE_CAP");
    if (env == nullptr || *env == '\0') {
      return ReductionSystem::default_degree_cap;
    }
    char*               end = nullptr;
    unsigned long const v   = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) {
      return ReductionSystem::default_degree_cap;
    }
    return v;
  }

  namespace {
    constexpr std::size_t reduction_budget = 50'000'000;
  }

  NcPoly RewriteRule::as_poly() const {
    return NcPoly(tail.ring(), lead) - tail;
  }

  ////////////////////////////////////////////////////////////////////////
  // ReductionSystem
  ////////////////////////////////////////////////////////////////////////

  ReductionSystem::ReductionSystem(RingPtr ring, std::size_t degree_cap)
      : _ring(std::move(ring)),
        _degree_cap(degree_cap),
        _memo(std::make_unique<Memo>()) {
    if (degree_cap == 0) {
      throw std::invalid_argument("degree cap must be positive");
    }
  }

  ReductionSystem::ReductionSystem(ReductionSystem const& other)
      : _ring(other._ring),
        _degree_cap(other._degree_cap),
        _rules(other._rules),
        _lead_index(other._lead_index),
        _lead_lengths(other._lead_lengths),
        _memo(std::make_unique<Memo>()) {}

  ReductionSystem& ReductionSystem::operator=(ReductionSystem const& other) {
    if (this != &other) {
      _ring         = other._ring;
      _degree_cap   = other._degree_cap;
      _rules        = other._rules;
      _lead_index   = other._lead_index;
      _lead_lengths = other._lead_lengths;
      _memo         = std::make_unique<Memo>();
    }
    return *this;
  }

  ReductionSystem ReductionSystem::from_relations(
      RingPtr                    ring,
      std::vector<NcPoly> const& relations,
      std::size_t                degree_cap) {
    ReductionSystem sys(std::move(ring), degree_cap);
    for (auto const& r : relations) {
      if (!sys.add_relation(r)) {
        break;
      }
    }
    sys.reduce_tails();
    return sys;
  }

  void ReductionSystem::rebuild_index() {
    _lead_index.clear();
    _lead_lengths.clear();
    for (std::size_t i = 0; i < _rules.size(); ++i) {
      _lead_index.emplace(_rules[i].lead, i);
      _lead_lengths.push_back(_rules[i].lead.size());
    }
    std::sort(_lead_lengths.begin(), _lead_lengths.end());
    _lead_lengths.erase(std::unique(_lead_lengths.begin(), _lead_lengths.end()),
                        _lead_lengths.end());
    clear_memo();
  }

  void ReductionSystem::clear_memo() const {
    std::lock_guard lock(_memo->mutex);
    _memo->table.clear();
  }

  void ReductionSystem::add_rule(RewriteRule rule) {
    if (!(*rule.tail.ring() == *_ring)) {
      throw ring_mismatch("rule tail over a different ring");
    }
    validate_word(rule.lead, _ring->alphabet);
    for (auto const& [w, c] : rule.tail.terms()) {
      if (_ring->compare(w, rule.lead) >= 0) {
        throw order_violation("rule " + fulcrum::to_string(rule.lead, _ring->alphabet)
                              + " -> " + rule.tail.to_string()
                              + " is not decreasing");
      }
    }
    if (_lead_index.count(rule.lead) != 0) {
      throw std::invalid_argument("duplicate lead "
                                  + fulcrum::to_string(rule.lead, _ring->alphabet));
    }
    _rules.push_back(std::move(rule));
    rebuild_index();
  }

  std::optional<std::vector<RewriteRule>>
  ReductionSystem::add_relation(NcPoly const& p) {
    std::vector<RewriteRule> created;
    std::deque<NcPoly>       todo{p};
    while (!todo.empty()) {
      NcPoly q = normal_form(todo.front());
      todo.pop_front();
      if (q.is_zero()) {
        continue;
      }
      if (q.is_constant()) {
        _rules.clear();
        _rules.push_back({Word(), NcPoly(_ring)});
        rebuild_index();
        return std::nullopt;
      }
      q               = q * q.lead_coeff().inverse();
      Word   lead     = q.lead_word();
      NcPoly tail     = NcPoly(_ring, lead) - q;
      // Rules whose leads contain the new lead are no longer irreducible.
      std::vector<RewriteRule> kept;
      for (auto& r : _rules) {
        if (r.lead.contains(lead)) {
          todo.push_back(r.as_poly());
        } else {
          kept.push_back(std::move(r));
        }
      }
      _rules = std::move(kept);
      std::erase_if(created, [&](RewriteRule const& r) {
        return r.lead.contains(lead);
      });
      _rules.push_back({lead, tail});
      created.push_back({lead, tail});
      rebuild_index();
    }
    return created;
  }

  bool ReductionSystem::collapsed() const {
    return _lead_index.count(Word()) != 0;
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  ReductionSystem::find_lead(Word const& w) const {
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (auto len : _lead_lengths) {
        if (pos + len > w.size()) {
          break;
        }
        auto it = _lead_index.find(w.sub(pos, len));
        if (it != _lead_index.end()) {
          return std::make_pair(it->second, pos);
        }
      }
    }
    return std::nullopt;
  }

  NcPoly ReductionSystem::nf_word(Word const& w, std::size_t& budget) const {
    {
      std::lock_guard lock(_memo->mutex);
      auto            it = _memo->table.find(w);
      if (it != _memo->table.end()) {
        return it->second;
      }
    }
    if (budget-- == 0) {
      throw reduction_budget_exceeded("normal form reduction budget exhausted");
    }
    NcPoly result(_ring);
    auto   hit = find_lead(w);
    if (!hit) {
      result.add_term(w, _ring->field.one());
    } else {
      auto const& rule   = _rules[hit->first];
      Word        prefix = w.sub(0, hit->second);
      Word        suffix = w.sub(hit->second + rule.lead.size());
      for (auto const& [t, c] : rule.tail.terms()) {
        NcPoly sub = nf_word(prefix * t * suffix, budget);
        for (auto const& [u, d] : sub.terms()) {
          result.add_term(u, c * d);
        }
      }
    }
    std::lock_guard lock(_memo->mutex);
    _memo->table.emplace(w, result);
    return result;
  }

  NcPoly ReductionSystem::normal_form(Word const& w) const {
    std::size_t budget = reduction_budget;
    return nf_word(w, budget);
  }

  NcPoly ReductionSystem::normal_form(NcPoly const& p) const {
    std::size_t budget = reduction_budget;
    NcPoly      result(_ring);
    for (auto const& [w, c] : p.terms()) {
      NcPoly sub = nf_word(w, budget);
      for (auto const& [u, d] : sub.terms()) {
        result.add_term(u, c * d);
      }
    }
    return result;
  }

  void ReductionSystem::reduce_tails() {
    for (auto& r : _rules) {
      r.tail = normal_form(r.tail);
    }
    clear_memo();
  }

  std::size_t ReductionSystem::max_lead_length() const {
    return _lead_lengths.empty() ? 0 : _lead_lengths.back();
  }

  std::string ReductionSystem::to_string() const {
    std::string out;
    for (auto const& r : _rules) {
      out += fulcrum::to_string(r.lead, _ring->alphabet) + " -> "
             + r.tail.to_string() + "\n";
    }
    return out;
  }

  NcPoly normal_form(NcPoly const& p, ReductionSystem const& sys) {
    return sys.normal_form(p);
  }

  ////////////////////////////////////////////////////////////////////////
  // Ambiguities
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Overlaps lead1 = A·B, lead2 = B·C with A, B, C nonempty, reported as
    // the length of A.
    std::vector<std::size_t> overlap_offsets(Word const& l1, Word const& l2) {
      std::vector<std::size_t> out;
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (l1.sub(l1.size() - k) == l2.sub(0, k)) {
          out.push_back(l1.size() - k);
        }
      }
      return out;
    }

    std::vector<std::size_t> inclusion_offsets(Word const& l1, Word const& l2) {
      std::vector<std::size_t> out;
      if (l1 == l2) {
        return out;
      }
      for (auto pos = l1.find(l2); pos != Word::npos; pos = l1.find(l2, pos + 1)) {
        out.push_back(pos);
      }
      return out;
    }

    Ambiguity make_overlap(std::size_t i,
                           std::size_t j,
                           Word const& l1,
                           Word const& l2,
                           std::size_t off) {
      std::size_t k = l1.size() - off;
      return Ambiguity{i, j, l1.sub(0, off), l1.sub(off), l2.sub(k), false};
    }

    Ambiguity make_inclusion(std::size_t i,
                             std::size_t j,
                             Word const& l1,
                             Word const& l2,
                             std::size_t pos) {
      return Ambiguity{
          i, j, l1.sub(0, pos), l2, l1.sub(pos + l2.size()), true};
    }

    NcPoly resolve(ReductionSystem const& sys,
                   RewriteRule const&     r1,
                   RewriteRule const&     r2,
                   Ambiguity const&       amb) {
      NcPoly lhs = amb.inclusion ? r1.tail : r1.tail.sandwich(Word(), amb.c);
      NcPoly rhs = r2.tail.sandwich(amb.a, amb.inclusion ? amb.c : Word());
      return sys.normal_form(lhs - rhs);
    }
  }  // namespace

  std::vector<Ambiguity> find_ambiguities(ReductionSystem const& sys) {
    std::vector<Ambiguity> out;
    auto const&            rules = sys.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (std::size_t j = 0; j < rules.size(); ++j) {
        auto const& l1 = rules[i].lead;
        auto const& l2 = rules[j].lead;
        for (auto off : overlap_offsets(l1, l2)) {
          if (off + l2.size() <= sys.degree_cap()) {
            out.push_back(make_overlap(i, j, l1, l2, off));
          }
        }
        for (auto pos : inclusion_offsets(l1, l2)) {
          if (l1.size() <= sys.degree_cap()) {
            out.push_back(make_inclusion(i, j, l1, l2, pos));
          }
        }
      }
    }
    auto const& ring = *sys.ring();
    std::stable_sort(out.begin(), out.end(), [&](auto const& x, auto const& y) {
      return ring.compare(x.word(), y.word()) < 0;
    });
    return out;
  }

  NcPoly ambiguity_difference(ReductionSystem const& sys, Ambiguity const& amb) {
    auto const& rules = sys.rules();
    return resolve(sys, rules.at(amb.rule1), rules.at(amb.rule2), amb);
  }

  bool is_locally_confluent(ReductionSystem const& sys) {
    for (auto const& amb : find_ambiguities(sys)) {
      if (!ambiguity_difference(sys, amb).is_zero()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Completion
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(CompletionStatus s) {
    switch (s) {
      case CompletionStatus::confluent:
        return "CONFLUENT";
      case CompletionStatus::collapsed_to_zero:
        return "COLLAPSED_TO_ZERO";
      case CompletionStatus::cap_exceeded:
        return "CAP_EXCEEDED";
    }
    return "?";
  }

  namespace {
    // Pending ambiguity identified by the leads involved, so that it
    // survives reindexing of the rule list.
    struct Pending {
      Word        word;
      Word        lead1;
      Word        lead2;
      std::size_t pos;
      bool        inclusion;
    };

    struct PendingLess {
      Ring const* ring;
      bool        operator()(Pending const& x, Pending const& y) const {
        auto c = ring->compare(x.word, y.word);
        if (c != 0) {
          return c < 0;
        }
        return std::tie(x.lead1, x.lead2, x.pos, x.inclusion)
               < std::tie(y.lead1, y.lead2, y.pos, y.inclusion);
      }
    };

    class Completion {
     public:
      explicit Completion(ReductionSystem sys)
          : _sys(std::move(sys)), _queue(PendingLess{_sys.ring().get()}) {
        for (auto const& r : _sys.rules()) {
          _original.insert(r.lead);
        }
        for (auto const& r : _sys.rules()) {
          enqueue_for(r.lead);
        }
      }

      CompletionReport run() {
        CompletionReport report{CompletionStatus::confluent, _sys, {}, 0, 0};
        if (_sys.collapsed()) {
          report.status = CompletionStatus::collapsed_to_zero;
          return report;
        }
        while (!_queue.empty()) {
          Pending p = *_queue.begin();
          _queue.erase(_queue.begin());
          auto const& index = _sys.rules();
          auto        r1    = find(p.lead1);
          auto        r2    = find(p.lead2);
          if (!r1 || !r2) {
            continue;
          }
          Ambiguity amb = p.inclusion
                              ? make_inclusion(*r1, *r2, p.lead1, p.lead2, p.pos)
                              : make_overlap(*r1, *r2, p.lead1, p.lead2, p.pos);
          ++report.ambiguities_checked;
          NcPoly diff = resolve(_sys, index[*r1], index[*r2], amb);
          if (diff.is_zero()) {
            continue;
          }
          auto created = _sys.add_relation(diff);
          if (!created) {
            report.status = CompletionStatus::collapsed_to_zero;
            break;
          }
          bool over_cap = false;
          for (auto const& r : *created) {
            if (r.lead.size() > _sys.degree_cap()) {
              over_cap = true;
            }
          }
          if (over_cap) {
            report.status = CompletionStatus::cap_exceeded;
            break;
          }
          for (auto const& r : *created) {
            if (find(r.lead)) {
              enqueue_for(r.lead);
            }
          }
        }
        report.ambiguities_beyond_cap = _beyond_cap;
        if (report.status != CompletionStatus::collapsed_to_zero) {
          _sys.reduce_tails();
        }
        for (auto const& r : _sys.rules()) {
          if (_original.count(r.lead) == 0) {
            report.new_rules.push_back(r);
          }
        }
        report.system = std::move(_sys);
        return report;
      }

     private:
      std::optional<std::size_t> find(Word const& lead) const {
        auto const& rules = _sys.rules();
        for (std::size_t i = 0; i < rules.size(); ++i) {
          if (rules[i].lead == lead) {
            return i;
          }
        }
        return std::nullopt;
      }

      void push(Pending p) {
        // Longer ambiguities are still resolved; only a rule that would
        // outgrow the cap stops the completion.
        if (p.word.size() > _sys.degree_cap()) {
          ++_beyond_cap;
        }
        _queue.insert(std::move(p));
      }

      // All overlaps between `lead` and every current lead, both ways.
      void enqueue_for(Word const& lead) {
        for (auto const& r : _sys.rules()) {
          auto const& other = r.lead;
          for (auto off : overlap_offsets(lead, other)) {
            push({lead.sub(0, off) * other, lead, other, off, false});
          }
          if (other == lead) {
            continue;
          }
          for (auto off : overlap_offsets(other, lead)) {
            push({other.sub(0, off) * lead, other, lead, off, false});
          }
          for (auto pos : inclusion_offsets(other, lead)) {
            push({other, other, lead, pos, true});
          }
          for (auto pos : inclusion_offsets(lead, other)) {
            push({lead, lead, other, pos, true});
          }
        }
      }

      ReductionSystem                  _sys;
      std::set<Pending, PendingLess>   _queue;
      std::unordered_set<Word, WordHash> _original;
      std::size_t                      _beyond_cap = 0;
    };
  }  // namespace

  CompletionReport complete(ReductionSystem sys) {
    return Completion(std::move(sys)).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Irreducible words
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Visit>
    void walk_irreducible(ReductionSystem const& sys,
                          std::size_t            max_len,
                          Visit&&                visit) {
      if (sys.collapsed()) {
        return;
      }
      std::size_t const       n = sys.ring()->alphabet.size();
      std::vector<Word>       frontier{Word()};
      std::unordered_set<Word, WordHash> leads;
      for (auto const& r : sys.rules()) {
        leads.insert(r.lead);
      }
      std::size_t max_lead = sys.max_lead_length();
      visit(Word());
      for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<Word> next;
        for (auto const& w : frontier) {
          for (std::size_t a = 0; a < n; ++a) {
            Word ext = w * Word::letter(static_cast<letter_type>(a));
            bool ok  = true;
            for (std::size_t k = 1; k <= std::min(max_lead, ext.size()); ++k) {
              if (leads.count(ext.sub(ext.size() - k)) != 0) {
                ok = false;
                break;
              }
            }
            if (ok) {
              visit(ext);
              next.push_back(std::move(ext));
            }
          }
        }
        frontier = std::move(next);
      }
    }
  }  // namespace

  IrreducibleCounts count_irreducible(ReductionSystem const& sys,
                                      std::size_t            max_len) {
    IrreducibleCounts out;
    out.per_length.assign(max_len + 1, 0);
    walk_irreducible(sys, max_len, [&](Word const& w) {
      ++out.per_length[w.size()];
      ++out.total;
    });
    out.finite = std::find(out.per_length.begin(), out.per_length.end(), 0)
                 != out.per_length.end();
    return out;
  }

  std::vector<Word> irreducible_words(ReductionSystem const& sys,
                                      std::size_t            max_len) {
    std::vector<Word> out;
    walk_irreducible(sys, max_len, [&](Word const& w) { out.push_back(w); });
    auto const& ring = *sys.ring();
    std::sort(out.begin(), out.end(), [&](Word const& a, Word const& b) {
      return ring.compare(a, b) < 0;
    });
    return out;
  }

}  // namespace fulcrum
