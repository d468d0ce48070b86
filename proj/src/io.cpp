#include "fulcrum/io.hpp"

#include <stdexcept>

namespace fulcrum {

  Field parse_field(std::string const& name) {
    if (name == "F2") {
      return Field::f2();
    }
    if (name == "Q") {
      return Field::rational();
    }
    if (name.size() > 1 && name[0] == 'F') {
      std::size_t p = 0;
      try {
        std::size_t used = 0;
        p = std::stoul(name.substr(1), &used);
        if (used != name.size() - 1) {
          throw std::invalid_argument("trailing characters");
        }
      } catch (std::exception const&) {
        throw std::invalid_argument("unknown field \"" + name + "\"");
      }
      return Field::fp(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field \"" + name + "\"");
  }

  json to_json(GroupTable const& g) {
    json names = json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
      names.push_back(g.name(a));
    }
    return {{"order", g.order()},
            {"identity", g.identity()},
            {"elements", names},
            {"table", g.table()},
            {"inverses", g.inverses()},
            {"distinguished", g.distinguished()}};
  }

  json to_json(ReductionSystem const& sys) {
    auto const& abc   = sys.ring()->alphabet;
    json        rules = json::array();
    for (auto const& r : sys.rules()) {
      rules.push_back({{"lead", to_string(r.lead, abc)},
                       {"tail", r.tail.to_string()}});
    }
    json letters = json::array();
    for (auto const& l : abc.letters()) {
      letters.push_back({{"id", l.id},
                         {"sort", l.sort == Sort::module_letter ? "module"
                                                                : "group"}});
    }
    return {{"field", sys.ring()->field.name()},
            {"order", sys.ring()->order == MonomialOrder::deglex
                          ? "deglex"
                          : "module_deglex"},
            {"degree_cap", sys.degree_cap()},
            {"alphabet", letters},
            {"rules", rules}};
  }

  json to_json(CompletionReport const& r) {
    json added = json::array();
    auto const& abc = r.system.ring()->alphabet;
    for (auto const& rule : r.new_rules) {
      added.push_back({{"lead", to_string(rule.lead, abc)},
                       {"tail", rule.tail.to_string()}});
    }
    return {{"status", to_string(r.status)},
            {"ambiguities_checked", r.ambiguities_checked},
            {"ambiguities_beyond_cap", r.ambiguities_beyond_cap},
            {"new_rules", added},
            {"system", to_json(r.system)}};
  }

  json to_json(QuotientAlgebra const& q) {
    return {{"flavor", to_string(q.base.flavor())},
            {"dimension", q.dimension ? json(*q.dimension) : json(nullptr)},
            {"per_length", q.counts.per_length},
            {"status", to_string(q.completion.status)},
            {"rule_count", q.completion.system.rules().size()},
            {"new_rule_count", q.completion.new_rules.size()},
            {"ambiguities_checked", q.completion.ambiguities_checked}};
  }

  json to_json(LiftingCertificate const& c) {
    json doc;
    doc["schema"]              = 1;
    doc["lambda"]              = c.lambda_bits;
    doc["mu"]                  = c.mu_bits;
    doc["group"]               = c.group;
    doc["group_order"]         = c.group_order;
    doc["lambda_valid"]        = c.lambda_valid;
    doc["mu_valid"]            = c.mu_valid;
    doc["quotient_compatible"] = c.quotient_compatible;
    json skew                  = json::array();
    for (auto const& s : c.skew) {
      skew.push_back({{"i", s.i},
                      {"j", s.j},
                      {"plain", s.plain},
                      {"with_mu", s.with_mu}});
    }
    doc["skew_primitivity"] = skew;
    doc["lifting"] = c.lifting ? to_json(*c.lifting) : json(nullptr);
    doc["cleft"]   = c.cleft ? to_json(*c.cleft) : json(nullptr);
    if (c.cubic) {
      json conv = json::array();
      for (auto m : c.cubic->matching) {
        conv.push_back(to_string(m));
      }
      doc["cubic"] = {{"relation", c.cubic->relation.to_string()},
                      {"conventions", conv}};
    } else {
      doc["cubic"] = nullptr;
    }
    if (c.galois) {
      json failures = json::array();
      for (auto const& f : c.galois->failures) {
        failures.push_back(
            {{"map", f.map}, {"relation", f.relation}, {"image", f.image}});
      }
      doc["galois"] = {{"dimension", c.galois->dimension},
                       {"basis", "irreducible words of each factor, "
                                 "left-major"},
                       {"rank_right", c.galois->rank_right},
                       {"rank_left", c.galois->rank_left},
                       {"bijective", c.galois->bijective()},
                       {"failures", failures}};
    } else {
      doc["galois"] = nullptr;
    }
    doc["valid"] = c.valid();
    return doc;
  }

  json to_json(PbwReport const& r) {
    return {{"schema", 1},
            {"status", to_string(r.completion.status)},
            {"new_rule_count", r.completion.new_rules.size()},
            {"per_length", r.counts.per_length},
            {"expected", r.expected},
            {"total", r.counts.total},
            {"pbw_shape", r.shape_ok},
            {"denominators_divide_2", r.denominators_ok},
            {"ok", r.ok()}};
  }

  ReductionSystem parse_presentation(std::string const& text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::exception const& e) {
      throw std::invalid_argument(std::string("presentation is not JSON: ")
                                  + e.what());
    }
    try {
      std::vector<Letter> letters;
      for (auto const& l : doc.at("alphabet")) {
        std::string const sort = l.at("sort").get<std::string>();
        if (sort != "module" && sort != "group") {
          throw std::invalid_argument("letter sort must be module or group");
        }
        letters.push_back({l.at("id").get<std::string>(),
                           sort == "module" ? Sort::module_letter
                                            : Sort::group_letter});
      }
      Field const f = parse_field(doc.value("field", std::string("F2")));
      std::string const order = doc.value("order", std::string("deglex"));
      MonomialOrder     mo;
      if (order == "deglex") {
        mo = MonomialOrder::deglex;
      } else if (order == "module_deglex") {
        mo = MonomialOrder::module_deglex;
      } else {
        throw std::invalid_argument("unknown monomial order \"" + order + "\"");
      }
      RingPtr ring = make_ring(Alphabet(std::move(letters)), f, mo);
      std::vector<NcPoly> rels;
      for (auto const& r : doc.at("relations")) {
        rels.push_back(parse_poly(r.get<std::string>(), ring));
      }
      std::size_t const cap
          = doc.value("degree_cap", configured_degree_cap());
      return ReductionSystem::from_relations(ring, rels, cap);
    } catch (json::exception const& e) {
      throw std::invalid_argument(std::string("malformed presentation: ")
                                  + e.what());
    }
  }

  std::string dump(json const& doc) {
    return doc.dump(2) + "\n";
  }

}  // namespace fulcrum
