#pragma once

// Command-line front end. Every code path prints JSON; exit status 0 means
// all asserted checks passed, 1 a failed check, 2 bad input.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/alexmod.hpp"
#include "artin/bassserre.hpp"
#include "artin/error.hpp"
#include "artin/io.hpp"
#include "artin/morse.hpp"
#include "artin/presentations.hpp"
#include "artin/rs.hpp"
#include "artin/stallings.hpp"

namespace artin::cli {

  using json = nlohmann::json;

  enum exit_code : int { ok = 0, check_failed = 1, bad_input = 2 };

  namespace detail {

    inline json verdict_json(TrivialityVerdict const& v) {
      json steps = json::array();
      for (auto const& s : v.certificate) {
        steps.push_back({{"relator", s.relator},
                         {"exponent", s.exponent},
                         {"rotation", s.rotation},
                         {"position", s.position},
                         {"conjugator", to_string(s.conjugator)}});
      }
      return {{"status", to_string(v.status)},
              {"nodes_expanded", v.nodes_expanded},
              {"certificate", steps}};
    }

    inline json report_json(SplittingReport const& r) {
      return {{"rank_X0", r.rank_X0},
              {"rank_Xhalf", r.rank_Xhalf},
              {"rank_Xquarter", r.rank_Xquarter},
              {"rank_folded_quarter", r.rank_folded_quarter},
              {"green_count", r.green_count},
              {"green_forest", r.green_forest},
              {"connected", r.connected},
              {"immersion_ok", r.immersion_ok},
              {"cover_degree_ok", r.cover_degree_ok},
              {"index_formula_ok", r.index_formula_ok},
              {"euler_count_ok", r.euler_count_ok}};
    }

    inline json group_json(AbelianGroup const& g) {
      json torsion = json::array();
      for (auto const& d : g.torsion) {
        torsion.push_back(d.str());
      }
      return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"description", g.describe()}};
    }

    inline json perfect_json(int M, int N, int P) {
      auto const v = perfect_kernel_verdict(M, N, P);
      json       j = {{"triple", {M, N, P}},
                      {"perfect", v.trivial},
                      {"witness", v.trivial ? json(nullptr) : json(v.witness_string())}};
      if (v.trivial) {
        j["certificate_D"] = v.certificate.str();
      } else if (v.kind != WitnessKind::rank_deficient) {
        j["witness_irreducible"] = v.factor_irreducible;
      }
      return j;
    }

    inline bool pairwise_coprime(int M, int N, int P) {
      return std::gcd(M, N) == 1 && std::gcd(N, P) == 1 && std::gcd(M, P) == 1;
    }

    inline json rewritten_json(RewrittenWord const& w) {
      json letters = json::array();
      for (auto const& l : w) {
        letters.push_back({{"shift", l.gen.shift},
                           {"generator", l.gen.generator.name()},
                           {"sign", l.sign}});
      }
      return letters;
    }

  }  // namespace detail

  // Runs one command line; `args` excludes the program name.
  inline int run(std::vector<std::string> args, std::ostream& out) {
    auto const start = std::chrono::steady_clock::now();
    json       report;
    int        status = exit_code::ok;

    auto finish = [&]() {
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      report["elapsed_ms"] = ms;
      report["exit_code"]  = status;
      out << report.dump() << "\n";
      return status;
    };
    auto fail = [&](bool passed) {
      if (!passed) {
        status = exit_code::check_failed;
      }
    };

    CLI::App app{"Verification tools for triangle Artin groups", "artin"};
    app.require_subcommand(1);
    bool json_output = true;
    app.add_flag("--json", json_output, "Emit JSON (always on)");
    SearchBudget budget;
    app.add_option("--budget-depth", budget.max_depth, "Search depth bound")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-len", budget.max_length, "Search word length bound")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-nodes", budget.max_nodes, "Search node bound")
        ->check(CLI::PositiveNumber);

    // split
    auto*                      split = app.add_subcommand("split", "Level-set splitting check");
    int                        split_m = 0;
    std::string                complex_file;
    auto* split_m_opt  = split->add_option("--m", split_m, "Hanham parameter m >= 3");
    auto* complex_opt  = split->add_option("--complex", complex_file, "Complex JSON file");
    split_m_opt->excludes(complex_opt);
    split->callback([&] {
      if (!*split_m_opt && !*complex_opt) {
        throw input_error("split needs --m or --complex");
      }
      HeightedComplex c = *split_m_opt ? hanham_complex(split_m)
                                       : io::complex_from_json(io::read_json_file(complex_file));
      auto r            = verify_splitting(c);
      report            = {{"command", "split"}, {"report", detail::report_json(r)}};
      report["inputs"]  = *split_m_opt ? json{{"m", split_m}} : json{{"complex", complex_file}};
      report["pass"]    = r.hypotheses_hold();
      fail(r.hypotheses_hold());
    });

    // perfect
    auto*            perfect = app.add_subcommand("perfect", "Perfectness of the degree-map kernel");
    std::vector<int> triple;
    int              grid = 0;
    auto* triple_opt = perfect->add_option("labels", triple, "M N P")->expected(3);
    auto* grid_opt   = perfect->add_option("--grid", grid, "All triples with labels in 2..MAX");
    triple_opt->excludes(grid_opt);
    perfect->callback([&] {
      if (*grid_opt) {
        if (grid < 2) {
          throw input_error("--grid needs MAX >= 2");
        }
        std::size_t agree = 0, total = 0;
        for (int M = 2; M <= grid; ++M) {
          for (int N = 2; N <= grid; ++N) {
            for (int P = 2; P <= grid; ++P) {
              json j          = detail::perfect_json(M, N, P);
              bool coprime    = detail::pairwise_coprime(M, N, P);
              j["coprime"]    = coprime;
              agree          += j["perfect"].get<bool>() == coprime;
              ++total;
              out << j.dump() << "\n";
            }
          }
        }
        report = {{"command", "perfect"}, {"inputs", {{"grid", grid}}},
                  {"triples", total},     {"agree_with_coprimality", agree},
                  {"pass", agree == total}};
        fail(agree == total);
        return;
      }
      if (triple.size() != 3) {
        throw input_error("perfect needs M N P or --grid MAX");
      }
      for (int l : triple) {
        if (l < 2) {
          throw input_error("labels must be >= 2");
        }
      }
      report            = detail::perfect_json(triple[0], triple[1], triple[2]);
      report["command"] = "perfect";
    });

    // h1-cover
    auto*            h1 = app.add_subcommand("h1-cover", "H1 of the n-fold cyclic cover");
    std::vector<int> h1_triple;
    int              h1_n = 1;
    h1->add_option("labels", h1_triple, "M N P")->expected(3)->required();
    h1->add_option("--n", h1_n, "Cover degree")->required();
    h1->callback([&] {
      if (h1_n < 1) {
        throw input_error("--n must be >= 1");
      }
      int const M = h1_triple[0], N = h1_triple[1], P = h1_triple[2];
      auto      group = h1_finite_cover(M, N, P, h1_n);
      auto      circ  = cokernel(circulant_specialization(alexander_rows(M, N, P), h1_n));
      AbelianGroup expected = circ;
      ++expected.free_rank;
      report = {{"command", "h1-cover"},
                {"inputs", {{"triple", {M, N, P}}, {"n", h1_n}}},
                {"h1", detail::group_json(group)},
                {"kernel_module_mod_t^n-1", detail::group_json(circ)},
                {"consistent", group == expected}};
      report["pass"] = group == expected;
      fail(group == expected);
    });

    // rewrite and rs
    std::string rw_word, rw_pivot = "a";
    int         rw_mod = 0;
    auto rewrite_cb = [&](std::string const& name) {
      Word        w = parse_word(rw_word);
      Transversal t = rw_mod > 0 ? Transversal(Modulo{rw_mod}) : Transversal(InfiniteShift{});
      auto        r = rewrite_tau(w, t, Symbol(rw_pivot));
      bool sound    = free_reduce(expand(r, t, Symbol(rw_pivot))) == free_reduce(w);
      report = {{"command", name},
                {"inputs", {{"word", rw_word}, {"mod", rw_mod}, {"pivot", rw_pivot}}},
                {"rewritten", to_string(r)},
                {"letters", detail::rewritten_json(r)},
                {"expansion_matches", sound}};
      fail(sound);
    };
    auto add_rewrite_options = [&](CLI::App* sub) {
      sub->add_option("--word", rw_word, "Word in the kernel")->required();
      sub->add_option("--mod", rw_mod, "Use the transversal a^0..a^(n-1)")
          ->check(CLI::PositiveNumber);
      sub->add_option("--pivot", rw_pivot, "Generator spanning the transversal");
    };
    auto* rewrite = app.add_subcommand("rewrite", "Reidemeister-Schreier rewriting");
    add_rewrite_options(rewrite);
    rewrite->callback([&] { rewrite_cb("rewrite"); });

    auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier tools");
    rs->require_subcommand(1);
    auto* rs_rewrite = rs->add_subcommand("rewrite", "Rewrite a kernel word");
    add_rewrite_options(rs_rewrite);
    rs_rewrite->callback([&] { rewrite_cb("rs rewrite"); });
    auto*            rs_cover = rs->add_subcommand("cover", "Presentation of the n-fold cyclic cover");
    std::vector<int> cover_triple;
    int              cover_n = 1;
    std::string      cover_file;
    auto* cover_triple_opt = rs_cover->add_option("labels", cover_triple, "M N P")->expected(3);
    auto* cover_file_opt =
        rs_cover->add_option("--presentation", cover_file, "Presentation JSON file");
    cover_triple_opt->excludes(cover_file_opt);
    rs_cover->add_option("--n", cover_n, "Cover degree")->required();
    rs_cover->callback([&] {
      Presentation p;
      if (*cover_file_opt) {
        p = io::presentation_from_json(io::read_json_file(cover_file));
      } else if (cover_triple.size() == 3) {
        p = triangle_artin(cover_triple[0], cover_triple[1], cover_triple[2]);
      } else {
        throw input_error("rs cover needs M N P or --presentation");
      }
      auto cover = finite_cover_presentation(p, cover_n);
      report     = {{"command", "rs cover"},
                    {"inputs", {{"presentation", io::to_json(p)}, {"n", cover_n}}},
                    {"cover", io::to_json(cover)},
                    {"abelianization", detail::group_json(abelianization(cover).group)}};
    });

    // fold
    auto*       fold_cmd = app.add_subcommand("fold", "Stallings folding of a graph file");
    std::string fold_file;
    std::optional<std::uint64_t> fold_seed;
    fold_cmd->add_option("file", fold_file, "Graph JSON file")->required();
    fold_cmd->add_option("--seed", fold_seed, "Shuffle the fold order");
    fold_cmd->callback([&] {
      auto           g = io::read_graph(fold_file);
      std::mt19937_64 rng(fold_seed.value_or(0));
      auto           r = fold(g, fold_seed ? &rng : nullptr);
      report = {{"command", "fold"},
                {"inputs", {{"file", fold_file}}},
                {"folds", r.folds},
                {"graph", io::to_json(r.graph)},
                {"connected", r.graph.is_connected()},
                {"betti", first_betti(r.graph)}};
    });

    // oppressive
    auto*       opp = app.add_subcommand("oppressive", "Oppressive set of an immersion");
    std::string opp_y, opp_x, opp_morphism;
    bool        opp_trivial_tail = false, opp_distinct = false;
    auto* opp_y_opt = opp->add_option("domain", opp_y, "Domain graph file");
    opp->add_option("codomain", opp_x, "Codomain graph file");
    auto* opp_m_opt = opp->add_option("--morphism", opp_morphism, "Morphism JSON file");
    opp_y_opt->excludes(opp_m_opt);
    opp->add_flag("--allow-trivial-tail", opp_trivial_tail, "Admit a trivial second path");
    opp->add_flag("--distinct-junction", opp_distinct, "Require y1 != y2");
    opp->callback([&] {
      GraphMorphism rho;
      if (*opp_m_opt) {
        std::filesystem::path path(opp_morphism);
        rho = io::morphism_from_json(io::read_json_file(path), path.parent_path());
      } else {
        if (opp_y.empty() || opp_x.empty()) {
          throw input_error("oppressive needs DOMAIN CODOMAIN or --morphism");
        }
        rho = io::morphism_by_labels(io::read_graph(opp_y), io::read_graph(opp_x));
      }
      OppressiveOptions options{opp_trivial_tail, opp_distinct};
      auto const        words = oppressive_set(rho, options);
      report = {{"command", "oppressive"},
                {"inputs",
                 {{"domain", opp_y}, {"codomain", opp_x}, {"morphism", opp_morphism},
                  {"allow_trivial_tail", opp_trivial_tail},
                  {"distinct_junction", opp_distinct}}},
                {"words", io::words_to_json(words)},
                {"count", words.size()}};
    });

    // separate
    auto*       sep = app.add_subcommand("separate", "Separation in a permutation quotient");
    std::string sep_phi, sep_c, sep_s;
    std::size_t sep_limit = 100000;
    sep->add_option("phi", sep_phi, "Permutation homomorphism JSON")->required();
    sep->add_option("graph", sep_c, "Folded subgroup graph JSON")->required();
    sep->add_option("words", sep_s, "JSON list of words")->required();
    sep->add_option("--order-limit", sep_limit, "Bound on the image subgroup order");
    sep->callback([&] {
      auto phi = io::permutation_hom_from_json(io::read_json_file(sep_phi));
      auto C   = io::read_graph(sep_c);
      auto S   = io::words_from_json(io::read_json_file(sep_s));
      bool sep_result = separates_finite(phi, C, S, sep_limit);
      report = {{"command", "separate"},
                {"inputs", {{"phi", sep_phi}, {"graph", sep_c}, {"words", sep_s}}},
                {"separates", sep_result}};
    });

    // bass
    auto* bass = app.add_subcommand("bass", "Free product and amalgam checks");
    bass->require_subcommand(1);
    auto* epi   = bass->add_subcommand("verify-epi", "Epimorphism onto Z/3 * Z/2");
    int   epi_k = 1;
    epi->add_option("--k", epi_k, "Parameter k >= 1")->required();
    epi->callback([&] {
      auto c  = check_hom_to_freeprod(epi_k, epi_images());
      auto fv = fixed_vertex_images(epi_k);
      json images = json::array(), fixed = json::array();
      for (auto const& im : c.relator_images) {
        images.push_back(to_string(im));
      }
      for (std::size_t i = 0; i < fv.words.size(); ++i) {
        fixed.push_back({{"word", to_string(fv.words[i])},
                         {"image", to_string(fv.images[i])},
                         {"fixes_base_edge", static_cast<bool>(fv.fixes_base_edge[i])}});
      }
      bool pass = c.ok() && fv.ok();
      report    = {{"command", "bass verify-epi"},
                   {"inputs", {{"k", epi_k}}},
                   {"relator_images", images},
                   {"surjective", c.surjective},
                   {"stabilizer_words", fixed},
                   {"pass", pass}};
      fail(pass);
    });
    auto* dih     = bass->add_subcommand("verify-dihedral", "Dihedral amalgam generators");
    int   dih_m   = 1;
    bool  dih_bad = false;
    dih->add_option("--m", dih_m, "Parameter m >= 1")->required();
    dih->add_flag("--corrupt", dih_bad, "Use the corrupted substitution (negative control)");
    dih->callback([&] {
      auto r = verify_dihedral_generators(dih_m, dih_bad);
      report = {{"command", "bass verify-dihedral"},
                {"inputs", {{"m", dih_m}, {"corrupt", dih_bad}}},
                {"relator_trivial", r.relator_trivial},
                {"ab_is_x", r.ab_is_x},
                {"s_recovered", r.s_recovered},
                {"pass", r.ok()}};
      fail(r.ok());
    });

    // hanham-check
    auto* hanham   = app.add_subcommand("hanham-check", "Relator checks for phi and psi");
    int   hanham_m = 3;
    hanham->add_option("--m", hanham_m, "Parameter m >= 3")->required();
    hanham->callback([&] {
      bool pass = true;
      json maps = json::object();
      for (auto const& [name, h] :
           {std::pair{"phi", hanham_phi(hanham_m)}, std::pair{"psi", hanham_psi(hanham_m)}}) {
        json checks = json::array();
        for (auto const& rc : check_hom(h, budget)) {
          pass = pass && rc.verdict.status == Triviality::trivial;
          checks.push_back({{"relator", to_string(rc.relator)},
                            {"image", to_string(rc.image)},
                            {"verdict", detail::verdict_json(rc.verdict)}});
        }
        maps[name] = checks;
      }
      report = {{"command", "hanham-check"},
                {"inputs",
                 {{"m", hanham_m},
                  {"budget", {{"depth", budget.max_depth},
                              {"length", budget.max_length},
                              {"nodes", budget.max_nodes}}}}},
                {"maps", maps},
                {"pass", pass}};
      fail(pass);
    });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_code::ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_code::ok;
    } catch (CLI::ParseError const& e) {
      report = {{"error", e.what()}, {"kind", "usage"}};
      status = exit_code::bad_input;
    } catch (input_error const& e) {
      report = {{"error", e.what()}, {"kind", "input"}};
      status = exit_code::bad_input;
    } catch (invariant_error const& e) {
      report = {{"error", e.what()}, {"kind", "internal"}};
      status = exit_code::check_failed;
    } catch (std::exception const& e) {
      report = {{"error", e.what()}, {"kind", "internal"}};
      status = exit_code::check_failed;
    }
    if (!report.contains("command")) {
      report["command"] = args.empty() ? "" : args.front();
    }
    return finish();
  }

  inline int run(int argc, char** argv, std::ostream& out = std::cout) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out);
  }

}  // namespace artin::cli
