#include "cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fulcrum/classify.hpp"
#include "fulcrum/io.hpp"

namespace fulcrum::cli {

  namespace {
    class usage_error : public std::invalid_argument {
      using std::invalid_argument::invalid_argument;
    };

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        throw std::runtime_error("cannot write " + path);
      }
      f << text;
    }

    std::string read_file(std::string const& path) {
      std::ifstream f(path, std::ios::binary);
      if (!f) {
        throw usage_error("cannot read " + path);
      }
      std::ostringstream s;
      s << f.rdbuf();
      return s.str();
    }

    void check_bits(std::string const& bits, char const* what) {
      if (bits.size() != 9
          || bits.find_first_not_of("01") != std::string::npos) {
        throw usage_error(std::string(what) + " must be 9 binary digits");
      }
    }

    // Runs body(k) for k in [0, n) on up to `jobs` threads.
    template <typename F>
    void parallel_for(std::size_t n, unsigned jobs, F body) {
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++) {
          body(k);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < std::max(1u, jobs); ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& th : pool) {
        th.join();
      }
    }

    int classify(RunConfig const& c, std::ostream& out, std::ostream& err) {
      if (c.field != "F2") {
        throw usage_error("classification is only defined over F2");
      }
      LambdaMode const  mode   = parse_lambda_mode(c.group);
      TableFormat const format = parse_table_format(c.format);
      Classification    cl     = partition_classes(enumerate_pairs(mode));
      out << "pairs: " << cl.pairs.size() << "\n"
          << "classes: " << cl.classes.size() << "\n";
      bool ok = true;
      if (mode == LambdaMode::gx
          && (cl.pairs.size() != 32 || cl.classes.size() != 10)) {
        err << "expected 32 pairs in 10 classes\n";
        ok = false;
      }
      if (cl.missing_inverse_witnesses != 0) {
        err << cl.missing_inverse_witnesses
            << " related pairs have no inverse witness\n";
      }
      if (c.certify) {
        std::vector<bool> representative(cl.pairs.size(), false);
        for (auto const& members : cl.classes) {
          for (auto a : members) {
            if (satisfies_quotient_condition(cl.pairs[a].lambda,
                                             dihedral_rack())) {
              representative[a] = true;
              break;
            }
          }
        }
        std::vector<LiftingCertificate> certs(cl.pairs.size());
        parallel_for(cl.pairs.size(), c.jobs, [&](std::size_t k) {
          certs[k] = certify_pair(cl.pairs[k].lambda_bits(),
                                  cl.pairs[k].mu_bits(),
                                  {representative[k]});
        });
        std::size_t certified = 0;
        for (std::size_t k = 0; k < certs.size(); ++k) {
          auto& p = cl.pairs[k];
          if (certs[k].lifting) {
            p.dimension = certs[k].lifting->dimension;
          }
          if (certs[k].galois) {
            p.galois_r = certs[k].galois->rank_right;
            p.galois_l = certs[k].galois->rank_left;
            ++certified;
          }
          if (!certs[k].valid()) {
            err << "certificate failed for " << p.lambda_bits() << "/"
                << p.mu_bits() << "\n";
            ok = false;
          }
        }
        out << "galois certified representatives: " << certified << "\n";
      }
      std::string const doc = emit_table(cl, format);
      if (c.out.empty()) {
        out << doc;
      } else {
        write_file(c.out, doc);
      }
      return ok ? exit_ok : exit_failure;
    }

    int verify(RunConfig const& c, std::ostream& out, std::ostream& err) {
      check_bits(c.lambda, "--lambda");
      check_bits(c.mu, "--mu");
      LambdaMode const   mode = parse_lambda_mode(c.group);
      LiftingCertificate cert = certify_pair(c.lambda, c.mu, {c.galois});
      if (!c.out.empty()) {
        write_file(c.out, dump(to_json(cert)));
      }
      if (!cert.lambda_valid) {
        err << "lambda fails the cocycle condition\n";
        return exit_failure;
      }
      if (!cert.mu_valid) {
        err << "mu fails its conditions for this lambda\n";
        return exit_failure;
      }
      if (mode == LambdaMode::s3 && !cert.quotient_compatible) {
        err << "lambda does not descend to S3\n";
        return exit_failure;
      }
      out << "group: " << cert.group << " (order " << cert.group_order
          << ")\n";
      std::size_t skew_ok = 0;
      for (auto const& s : cert.skew) {
        skew_ok += s.plain && s.with_mu;
      }
      out << "skew-primitive relations: " << skew_ok << "/" << cert.skew.size()
          << "\n";
      auto dim = [](std::optional<QuotientAlgebra> const& q) {
        return q && q->dimension ? std::to_string(*q->dimension)
                                 : std::string("-");
      };
      out << "dim L: " << dim(cert.lifting) << "\n"
          << "dim A: " << dim(cert.cleft) << "\n";
      if (cert.cubic) {
        out << "cubic: " << cert.cubic->relation.to_string() << " [";
        for (std::size_t k = 0; k < cert.cubic->matching.size(); ++k) {
          out << (k ? ", " : "") << to_string(cert.cubic->matching[k]);
        }
        out << "]\n";
      }
      if (cert.galois) {
        out << "galois ranks: " << cert.galois->rank_right << " "
            << cert.galois->rank_left << " of "
            << cert.galois->dimension * cert.galois->dimension << "\n";
      }
      bool const ok = cert.valid();
      out << (ok ? "VALID" : "INVALID") << "\n";
      return ok ? exit_ok : exit_failure;
    }

    int nichols_dim(std::ostream& out, std::ostream& err) {
      std::size_t const d = nichols_dimension();
      out << d << "\n";
      if (d != 12) {
        err << "expected dimension 12\n";
        return exit_failure;
      }
      return exit_ok;
    }

    int jordan_verify(RunConfig const& c, std::ostream& out, std::ostream& err) {
      bool ok   = true;
      json doc  = {{"schema", 1}, {"max_len", c.max_len}};
      std::size_t expected = 0;
      for (std::size_t ell = 0; ell <= c.max_len; ++ell) {
        expected += pbw_count(ell);
      }
      for (auto f : {JordanFlavor::bosonization, JordanFlavor::u_jordan,
                     JordanFlavor::u_prime}) {
        PbwReport const r = verify_pbw(build_jordan(f, c.max_len));
        out << to_string(f) << ": " << to_string(r.completion.status)
            << ", new rules " << r.completion.new_rules.size()
            << ", irreducible words " << r.counts.total << "\n";
        doc["presentations"][to_string(f)] = to_json(r);
        if (!r.ok()) {
          err << to_string(f) << " does not have the PBW basis\n";
          ok = false;
        }
      }
      if (c.coactions) {
        auto const co = jordan_coactions(std::max<std::size_t>(c.max_len, 6));
        out << "coactions: " << (co.ok() ? "ok" : "FAILED") << " ("
            << co.relations_checked << " relations)\n";
        doc["coactions"] = {{"ok", co.ok()},
                            {"relations_checked", co.relations_checked}};
        for (auto const& f : co.failures) {
          err << f.map << " does not kill " << f.relation << "\n";
        }
        ok = ok && co.ok();
      }
      out << "count: " << expected << "\n";
      if (!c.out.empty()) {
        write_file(c.out, dump(doc));
      }
      return ok ? exit_ok : exit_failure;
    }

    int complete_file(RunConfig const& c, std::ostream& out) {
      ReductionSystem  sys    = parse_presentation(read_file(c.input));
      CompletionReport report = complete(std::move(sys));
      json             doc    = to_json(report);
      doc["schema"]           = 1;
      if (report.status == CompletionStatus::confluent) {
        auto counts = count_irreducible(report.system,
                                        report.system.degree_cap());
        doc["irreducible_per_length"] = counts.per_length;
        doc["finite"]                 = counts.finite;
      }
      if (c.out.empty()) {
        out << dump(doc);
      } else {
        write_file(c.out, dump(doc));
        out << to_string(report.status) << "\n";
      }
      return report.status == CompletionStatus::cap_exceeded ? exit_failure
                                                             : exit_ok;
    }

    // CLI11 reports parse errors with its own codes; map them to ours.
    int parse_and_run(CLI::App& app, int argc, char const* const* argv,
                      RunConfig& config) {
      try {
        app.parse(argc, argv);
      } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
      } catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_usage;
      }
      return run(config, std::cout, std::cerr);
    }
  }  // namespace

  int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    try {
      switch (config.command) {
        case Command::classify:
          return classify(config, out, err);
        case Command::verify:
          return verify(config, out, err);
        case Command::nichols_dim:
          return nichols_dim(out, err);
        case Command::jordan_verify:
          return jordan_verify(config, out, err);
        case Command::complete:
          return complete_file(config, out);
      }
    } catch (usage_error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_failure;
    }
    return exit_usage;
  }

  int fk3_main(int argc, char const* const* argv) {
    RunConfig config;
    CLI::App  app{"Liftings of the Fomin-Kirillov algebra FK3 over F2"};
    app.require_subcommand(1);

    auto* cls = app.add_subcommand("classify", "Enumerate and classify pairs");
    cls->add_option("--group", config.group, "gx or s3")
        ->check(CLI::IsMember({"gx", "s3"}));
    cls->add_option("--out", config.out, "Table path (default: stdout)");
    cls->add_option("--format", config.format, "json, csv or md")
        ->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
    cls->add_option("--field", config.field, "Coefficient field")
        ->check(CLI::IsMember({"F2"}));
    cls->add_flag("--certify", config.certify,
                  "Certify dimensions and Galois maps");
    cls->add_option("--jobs", config.jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u));
    cls->callback([&] { config.command = Command::classify; });

    auto* ver = app.add_subcommand("verify", "Certify one pair");
    ver->add_option("--lambda", config.lambda, "9 bits, row-major")->required();
    ver->add_option("--mu", config.mu, "9 bits, row-major")->required();
    ver->add_option("--group", config.group, "gx or s3")
        ->check(CLI::IsMember({"gx", "s3"}));
    ver->add_flag("--galois", config.galois, "Compute Galois map ranks");
    ver->add_option("--json", config.out, "Certificate path");
    ver->callback([&] { config.command = Command::verify; });

    auto* nd = app.add_subcommand("nichols-dim", "Dimension of FK3");
    nd->callback([&] { config.command = Command::nichols_dim; });

    return parse_and_run(app, argc, argv, config);
  }

  int jordan_main(int argc, char const* const* argv) {
    RunConfig config;
    CLI::App  app{"PBW and coaction checks for the Jordan plane"};
    app.require_subcommand(1);
    auto* ver = app.add_subcommand("verify", "Complete and count PBW words");
    ver->add_option("--max-len", config.max_len, "Truncation length")
        ->check(CLI::Range(std::size_t{2}, std::size_t{16}));
    ver->add_option("--json", config.out, "Report path");
    ver->add_flag("--coactions", config.coactions,
                  "Also check both coactions on U'");
    ver->callback([&] { config.command = Command::jordan_verify; });
    return parse_and_run(app, argc, argv, config);
  }

  int fulcrum_main(int argc, char const* const* argv) {
    RunConfig config;
    CLI::App  app{"Word rewriting on presentation files"};
    app.require_subcommand(1);
    auto* cmp = app.add_subcommand("complete", "Complete a presentation");
    cmp->add_option("presentation", config.input, "JSON presentation file")
        ->required();
    cmp->add_option("--json", config.out, "Report path (default: stdout)");
    cmp->callback([&] { config.command = Command::complete; });
    return parse_and_run(app, argc, argv, config);
  }

}  // namespace fulcrum::cli
