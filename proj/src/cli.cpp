#include "skewbrace/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/rational.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace::cli {

  namespace {
    namespace fs = std::filesystem;

    enum class Format { text, json, csv };

    std::map<std::string, Format> const format_names{
        {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    std::string scalar(Json const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    }

    std::string csv_cell(std::string s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string quoted = "\"";
      for (char c : s) {
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return quoted + "\"";
    }

    // An object rendered as JSON, aligned "key  value" lines, or
    // "field,value" rows; every format shows the same values.
    std::string render(Json const& j, Format f) {
      std::ostringstream s;
      switch (f) {
        case Format::json: s << j.dump(2) << '\n'; break;
        case Format::text: {
          std::size_t width = 0;
          for (auto const& [k, v] : j.items()) {
            width = std::max(width, k.size());
          }
          for (auto const& [k, v] : j.items()) {
            s << std::left << std::setw(static_cast<int>(width) + 2) << k << scalar(v) << '\n';
          }
          break;
        }
        case Format::csv:
          s << "field,value\n";
          for (auto const& [k, v] : j.items()) {
            s << csv_cell(k) << ',' << csv_cell(scalar(v)) << '\n';
          }
          break;
      }
      return s.str();
    }

    // Table of uniform objects.
    std::string render_rows(Json const& rows, Format f) {
      if (f == Format::json) {
        return rows.dump(2) + "\n";
      }
      std::vector<std::string> keys;
      if (!rows.empty()) {
        for (auto const& [k, v] : rows.front().items()) {
          keys.push_back(k);
        }
      }
      std::ostringstream s;
      if (f == Format::csv) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
          s << (i ? "," : "") << csv_cell(keys[i]);
        }
        s << '\n';
        for (auto const& row : rows) {
          for (std::size_t i = 0; i < keys.size(); ++i) {
            s << (i ? "," : "") << csv_cell(scalar(row[keys[i]]));
          }
          s << '\n';
        }
        return s.str();
      }
      std::vector<std::size_t> width;
      for (auto const& k : keys) {
        std::size_t w = k.size();
        for (auto const& row : rows) {
          w = std::max(w, scalar(row[k]).size());
        }
        width.push_back(w + 2);
      }
      for (std::size_t i = 0; i < keys.size(); ++i) {
        s << std::left << std::setw(static_cast<int>(width[i])) << keys[i];
      }
      s << '\n';
      for (auto const& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
          s << std::left << std::setw(static_cast<int>(width[i])) << scalar(row[keys[i]]);
        }
        s << '\n';
      }
      return s.str();
    }

    // Output paths are checked before any computation starts.
    void check_out_file(std::string const& path) {
      fs::path const p(path);
      fs::path const parent = p.parent_path().empty() ? fs::path(".") : p.parent_path();
      if (!fs::is_directory(parent)) {
        throw Error(ErrorKind::io_error, "output directory '" + parent.string() + "' does not exist");
      }
      if (fs::is_directory(p)) {
        throw Error(ErrorKind::io_error, "output path '" + path + "' is a directory");
      }
    }

    void prepare_out_dir(std::string const& path) {
      fs::path const p(path);
      if (fs::exists(p)) {
        if (!fs::is_directory(p)) {
          throw Error(ErrorKind::io_error, "output path '" + path + "' is not a directory");
        }
        return;
      }
      fs::path const parent = p.parent_path().empty() ? fs::path(".") : p.parent_path();
      if (!fs::is_directory(parent)) {
        throw Error(ErrorKind::io_error, "parent of '" + path + "' does not exist");
      }
      fs::create_directory(p);
    }

    void write_text(std::string const& path, std::string const& text) {
      std::ofstream f(path);
      if (!f || !(f << text)) {
        throw Error(ErrorKind::io_error, "cannot write '" + path + "'");
      }
    }

    std::string group_name(FiniteGroup const& G) {
      try {
        return catalog_name(G.order(), catalog_index(G));
      } catch (Error const&) {
        return "order " + std::to_string(G.order());
      }
    }

    Json substructure_json(SubStructure const& S) {
      return {{"elements", S.elements.elements()},
              {"sub_brace", S.is_sub_brace},
              {"left_ideal", S.is_left_ideal},
              {"strong_left_ideal", S.is_strong_left_ideal},
              {"ideal", S.is_ideal}};
    }

    std::vector<int> parse_int_list(std::string const& text) {
      std::vector<int>  out;
      std::stringstream s(text);
      std::string       item;
      while (std::getline(s, item, ',')) {
        if (item.empty()) {
          continue;
        }
        std::size_t used = 0;
        int         v    = 0;
        try {
          v = std::stoi(item, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != item.size()) {
          throw Error(ErrorKind::bad_params, "'" + item + "' is not an integer");
        }
        out.push_back(v);
      }
      return out;
    }

    bool is_elementary_abelian(FiniteGroup const& G) {
      if (!G.is_abelian() || G.primes().size() != 1) {
        return false;
      }
      for (std::size_t a = 1; a < G.order(); ++a) {
        if (G.element_order(a) != G.primes().front()) {
          return false;
        }
      }
      return true;
    }

    struct Options {
      std::string format = "text";
      std::string out;
    };

    void add_format(CLI::App* cmd, Options& o) {
      cmd->add_option("--format", o.format, "text, json or csv")
          ->check(CLI::IsMember({"text", "json", "csv"}));
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skew brace toolkit: verification, analysis, construction, enumeration, "
                 "Yang-Baxter solutions and rational braces",
                 "skewbrace"};
    app.require_subcommand(1);

    Options     opt;
    std::string file, file2;
    int         code = ok;
    Limits const limits = Limits::from_env();

    // verify
    auto* verify = app.add_subcommand("verify", "validate a brace file");
    verify->add_option("file", file, "brace JSON")->required();
    add_format(verify, opt);
    verify->callback([&] {
      auto const B = load_brace(file);
      out << render({{"valid", true},
                     {"order", B.order()},
                     {"additive", group_name(B.additive())},
                     {"multiplicative", group_name(B.multiplicative())}},
                    format_names.at(opt.format));
    });

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "ideal structure and series");
    analyze_cmd->add_option("file", file, "brace JSON")->required();
    analyze_cmd->add_option("--out", opt.out, "write the report here");
    add_format(analyze_cmd, opt);
    analyze_cmd->callback([&] {
      if (!opt.out.empty()) {
        check_out_file(opt.out);
      }
      auto const B    = load_brace(file);
      auto const text = render(report_to_json(analyze(B, limits)), format_names.at(opt.format));
      if (opt.out.empty()) {
        out << text;
      } else {
        write_text(opt.out, text);
      }
    });

    // dedekind
    auto* dedekind = app.add_subcommand("dedekind", "exit 0 iff every sub-skew brace is an ideal");
    dedekind->add_option("file", file, "brace JSON")->required();
    add_format(dedekind, opt);
    dedekind->callback([&] {
      auto const B = load_brace(file);
      auto const r = is_dedekind(B, limits);
      Json       j{{"dedekind", r.dedekind}};
      if (r.witness) {
        j["witness"] = substructure_json(*r.witness);
      }
      out << render(j, format_names.at(opt.format));
      code = r.dedekind ? ok : predicate_false;
    });

    // construct
    std::string family_tag, group_file;
    int         p = 2, n = 1;
    auto*       construct_cmd = app.add_subcommand("construct", "build a brace from a family");
    construct_cmd
        ->add_option("--family", family_tag,
                     "two_power, odd_p_cyclic, odd_p_nonabelian, trivial, almost_trivial")
        ->required();
    construct_cmd->add_option("--p", p, "prime");
    construct_cmd->add_option("--n", n, "exponent");
    construct_cmd->add_option("--group", group_file, "group JSON (trivial, almost_trivial)");
    construct_cmd->add_option("--out", opt.out, "brace JSON destination (default stdout)");
    construct_cmd->callback([&] {
      if (!opt.out.empty()) {
        check_out_file(opt.out);
      }
      auto const family = parse_family(family_tag);
      if (!family) {
        throw Error(ErrorKind::bad_params, "unknown family '" + family_tag + "'");
      }
      FamilyParams params{*family, p, n, std::nullopt};
      if (!group_file.empty()) {
        params.base = group_from_json(read_json_file(group_file));
      }
      auto const B = construct(params, limits);
      Json const j = brace_to_json(B, family_labels(params));
      if (opt.out.empty()) {
        out << j.dump(2) << '\n';
      } else {
        write_json_file(opt.out, j);
        out << "wrote " << to_string(*family) << " brace of order " << B.order() << " to "
            << opt.out << '\n';
      }
    });

    // enumerate
    std::size_t order    = 0;
    std::string additive;
    bool        up_to_iso = false;
    auto*       enumerate = app.add_subcommand("enumerate", "all skew braces of a small order");
    enumerate->add_option("--order", order, "order (at most 15)")->required();
    enumerate->add_option("--additive", additive, "cyclic, elab or a catalog index");
    enumerate->add_flag("--up-to-iso", up_to_iso, "one file per isomorphism class");
    enumerate->add_option("--out", opt.out, "output directory")->required();
    add_format(enumerate, opt);
    enumerate->callback([&] {
      prepare_out_dir(opt.out);
      std::vector<std::size_t> indices;
      if (additive.empty()) {
        for (std::size_t i = 0; i < catalog_size(order); ++i) {
          indices.push_back(i);
        }
        if (indices.empty()) {
          catalog_group(order, 0);
        }
      } else if (additive == "cyclic") {
        indices.push_back(0);
      } else if (additive == "elab") {
        for (std::size_t i = 0; i < catalog_size(order); ++i) {
          if (is_elementary_abelian(catalog_group(order, i))) {
            indices.push_back(i);
          }
        }
        if (indices.empty()) {
          throw Error(ErrorKind::out_of_catalog,
                      "no elementary abelian group of order " + std::to_string(order));
        }
      } else {
        auto const v = parse_int_list(additive);
        if (v.size() != 1 || v[0] < 0) {
          throw Error(ErrorKind::bad_params, "--additive expects cyclic, elab or an index");
        }
        indices.push_back(static_cast<std::size_t>(v[0]));
      }

      Json        rows = Json::array();
      std::size_t file_index = 0;
      auto        emit       = [&](SkewBrace const& B) {
        std::ostringstream name;
        name << "brace-" << std::setw(4) << std::setfill('0') << ++file_index << ".json";
        write_json_file((fs::path(opt.out) / name.str()).string(), brace_to_json(B));
      };
      for (std::size_t idx : indices) {
        auto const result = enumerate_catalog_group(order, idx, limits);
        if (up_to_iso) {
          for (auto const& B : result.representatives) {
            emit(B);
          }
        } else {
          for (auto const& B : enumerate_on_additive(catalog_group(order, idx), limits)) {
            emit(B);
          }
        }
        for (auto const& c : result.counts) {
          rows.push_back({{"additive", c.add_name},
                          {"multiplicative", c.mul_name},
                          {"classes", c.classes},
                          {"braces", c.braces}});
        }
      }
      Format const f          = format_names.at(opt.format);
      std::string const table = render_rows(rows, f);
      char const*       ext   = f == Format::json ? "json" : f == Format::csv ? "csv" : "txt";
      write_text((fs::path(opt.out) / (std::string("counts.") + ext)).string(), table);
      out << table;
    });

    // iso
    auto* iso = app.add_subcommand("iso", "exit 0 iff the two braces are isomorphic");
    iso->add_option("first", file, "brace JSON")->required();
    iso->add_option("second", file2, "brace JSON")->required();
    add_format(iso, opt);
    iso->callback([&] {
      auto const A    = load_brace(file);
      auto const B    = load_brace(file2);
      Json       j{{"isomorphic", false}};
      if (A.order() != B.order()) {
        j["refutation"] = "order";
      } else {
        auto const cert = are_isomorphic(A, B);
        j["isomorphic"] = cert.isomorphic;
        if (cert.bijection) {
          j["bijection"] = *cert.bijection;
        } else {
          j["refutation"] = cert.refutation;
        }
      }
      out << render(j, format_names.at(opt.format));
      code = j["isomorphic"].get<bool>() ? ok : predicate_false;
    });

    // ybe
    std::size_t steps = 1, max_steps = 0;
    auto*       ybe   = app.add_subcommand("ybe", "set-theoretic Yang-Baxter solutions");
    ybe->require_subcommand(1);
    auto* from_brace_cmd = ybe->add_subcommand("from-brace", "r_B of a brace file");
    from_brace_cmd->add_option("file", file, "brace JSON")->required();
    from_brace_cmd->add_option("--out", opt.out, "solution JSON destination (default stdout)");
    from_brace_cmd->callback([&] {
      if (!opt.out.empty()) {
        check_out_file(opt.out);
      }
      Json const j = solution_to_json(from_brace(load_brace(file)));
      if (opt.out.empty()) {
        out << j.dump(2) << '\n';
      } else {
        write_json_file(opt.out, j);
      }
    });
    auto* check = ybe->add_subcommand("check", "validate a solution file");
    check->add_option("file", file, "solution JSON")->required();
    add_format(check, opt);
    check->callback([&] {
      auto const S  = load_solution(file);
      auto const pr = solution_predicates(S);
      out << render({{"valid", true},
                     {"size", S.size()},
                     {"involutive", pr.involutive},
                     {"diagonal_fixing", pr.diagonal_fixing}},
                    format_names.at(opt.format));
    });
    auto* retract_cmd = ybe->add_subcommand("retract", "iterate the retraction");
    retract_cmd->add_option("file", file, "solution JSON")->required();
    retract_cmd->add_option("--steps", steps, "number of retractions (default 1)");
    retract_cmd->add_option("--out", opt.out, "write the last retraction here");
    add_format(retract_cmd, opt);
    retract_cmd->callback([&] {
      if (!opt.out.empty()) {
        check_out_file(opt.out);
      }
      SetSolution              S = load_solution(file);
      std::vector<std::size_t> sizes{S.size()};
      for (std::size_t k = 0; k < steps; ++k) {
        S = retract(S).solution;
        sizes.push_back(S.size());
      }
      if (!opt.out.empty()) {
        write_json_file(opt.out, solution_to_json(S));
      }
      out << render({{"steps", steps}, {"sizes", sizes}}, format_names.at(opt.format));
    });
    auto* level = ybe->add_subcommand("level", "multipermutation level; exit 1 if infinite");
    level->add_option("file", file, "solution JSON")->required();
    level->add_option("--steps", max_steps, "maximum retractions (default: size)");
    add_format(level, opt);
    level->callback([&] {
      auto const S     = load_solution(file);
      std::size_t const max = max_steps == 0 ? S.size() : max_steps;
      auto const  lvl   = multipermutation_level(S, max);
      out << render({{"sizes", retraction_sizes(S, max)},
                     {"level", lvl ? Json(*lvl) : Json(nullptr)}},
                    format_names.at(opt.format));
      code = lvl ? ok : predicate_false;
    });

    // rational
    std::string   variant_tag, forbidden, m1 = "1", m2 = "4", x = "1";
    std::size_t   samples = 1000;
    std::uint64_t seed    = default_seed;
    int           witness_prime = 0;
    auto*         rational = app.add_subcommand("rational", "sampled checks of a rational brace");
    rational->add_option("--variant", variant_tag, "a2a, a2b, c1 or c2")->required();
    rational->add_option("--forbidden", forbidden, "comma-separated forbidden primes");
    rational->add_option("--m1", m1, "numerator parameter (a2b)");
    rational->add_option("--m2", m2, "denominator parameter (a2b)");
    rational->add_option("--x", x, "distinguished element (c1, c2)");
    rational->add_option("--sample", samples, "number of sampled triples");
    rational->add_option("--seed", seed, "sampling seed");
    rational->add_option("--witness-prime", witness_prime, "non-Dedekind witness prime (a2b)");
    add_format(rational, opt);
    rational->callback([&] {
      auto const variant = parse_variant(variant_tag);
      if (!variant) {
        throw Error(ErrorKind::invalid_spec, "unknown variant '" + variant_tag + "'");
      }
      RationalBraceSpec spec;
      spec.variant = *variant;
      spec.domain  = LocalizedDomain(parse_int_list(forbidden));
      auto whole   = [](std::string const& s, char const* name) {
        Rational const q = parse_rational(s);
        if (boost::multiprecision::denominator(q) != 1) {
          throw Error(ErrorKind::invalid_spec, std::string(name) + " must be an integer");
        }
        return BigInt(boost::multiprecision::numerator(q));
      };
      spec.m1 = whole(m1, "m1");
      spec.m2 = whole(m2, "m2");
      spec.x  = parse_rational(x);
      spec.validate();

      auto const report = axiom_sample_check(spec, seed, samples);
      Json       j{{"variant", to_string(*variant)},
                   {"seed", seed},
                   {"result", report.summary()},
                   {"passed", report.passed},
                   {"kernel_checks", report.kernel_checks}};
      bool success = report.passed;
      if (witness_prime != 0) {
        auto const w              = dedekind_witness(spec, witness_prime, seed, samples);
        j["witness_prime"]        = w.prime;
        j["witness_subgroup"]     = w.y_rule;
        j["witness_element"]      = to_string(w.violating);
        j["witness_element_in_Y"] = w.violating_in_y;
        j["not_dedekind"]         = w.certifies_non_dedekind();
        success                   = success && w.certifies_non_dedekind();
      }
      out << render(j, format_names.at(opt.format));
      code = success ? ok : predicate_false;
    });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(std::move(reversed));
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::CallForVersion const&) {
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    } catch (Error const& e) {
      err << "error: " << e.what();
      if (!e.witness().empty()) {
        err << " (witness";
        for (int w : e.witness()) {
          err << ' ' << w;
        }
        err << ')';
      }
      err << '\n';
      return e.kind() == ErrorKind::bound_exceeded ? bound_exceeded : input_error;
    } catch (fs::filesystem_error const& e) {
      err << "error: IoError: " << e.what() << '\n';
      return input_error;
    }
    return code;
  }

}  // namespace skewbrace::cli
