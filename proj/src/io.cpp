#include "skewbrace/io.hpp"

#include <fstream>
#include <sstream>

#include "skewbrace/errors.hpp"

namespace skewbrace {

  namespace {
    [[noreturn]] void schema(std::string const& field, std::string const& what) {
      throw Error(ErrorKind::schema_error, "field '" + field + "': " + what);
    }

    Json const& field(Json const& j, std::string const& name) {
      if (!j.is_object()) {
        schema(name, "document is not an object");
      }
      auto it = j.find(name);
      if (it == j.end()) {
        schema(name, "missing");
      }
      return *it;
    }

    std::size_t size_field(Json const& j, std::string const& name) {
      Json const& v = field(j, name);
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) {
        schema(name, "expected a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    // n rows of n integers
    Table square(Json const& j, std::string const& name, std::size_t n) {
      Json const& v = field(j, name);
      if (!v.is_array() || v.size() != n) {
        schema(name, "expected " + std::to_string(n) + " rows");
      }
      Table t;
      for (std::size_t r = 0; r < n; ++r) {
        Json const& row = v[r];
        if (!row.is_array() || row.size() != n) {
          schema(name, "row " + std::to_string(r) + " does not have " + std::to_string(n)
                           + " entries");
        }
        std::vector<int> out;
        for (auto const& e : row) {
          if (!e.is_number_integer()) {
            schema(name, "row " + std::to_string(r) + " has a non-integer entry");
          }
          out.push_back(e.get<int>());
        }
        t.push_back(std::move(out));
      }
      return t;
    }
  }  // namespace

  Json group_to_json(FiniteGroup const& G) {
    return {{"order", G.order()}, {"table", G.table()}};
  }

  FiniteGroup group_from_json(Json const& j) {
    std::size_t const n = size_field(j, "order");
    return FiniteGroup::from_table(square(j, "table", n));
  }

  Json brace_to_json(SkewBrace const& B, std::vector<std::string> const& labels) {
    Json j{{"order", B.order()},
           {"add", B.additive().table()},
           {"mul", B.multiplicative().table()}};
    if (!labels.empty()) {
      j["labels"] = labels;
    }
    return j;
  }

  SkewBrace brace_from_json(Json const& j) {
    std::size_t const n   = size_field(j, "order");
    Table const       add = square(j, "add", n);
    Table const       mul = square(j, "mul", n);
    if (auto it = j.find("labels"); it != j.end()) {
      if (!it->is_array() || it->size() != n
          || !std::all_of(it->begin(), it->end(), [](Json const& e) { return e.is_string(); })) {
        schema("labels", "expected " + std::to_string(n) + " strings");
      }
    }
    return build_brace(add, mul);
  }

  Json solution_to_json(SetSolution const& S) {
    return {{"size", S.size()}, {"lambda", S.lambda_perms()}, {"rho", S.rho_perms()}};
  }

  SetSolution solution_from_json(Json const& j) {
    std::size_t const n = size_field(j, "size");
    return build_solution(square(j, "lambda", n), square(j, "rho", n));
  }

  Json report_to_json(AnalysisReport const& r) {
    auto opt = [](std::optional<int> const& v) { return v ? Json(*v) : Json(nullptr); };
    return {{"order", r.order},
            {"trivial", r.predicates.is_trivial},
            {"almost_trivial", r.predicates.is_almost_trivial},
            {"bi_skew", r.predicates.is_bi_skew},
            {"abelian_type", r.predicates.is_abelian_type},
            {"additive_abelian", r.additive_abelian},
            {"additive_cyclic", r.additive_cyclic},
            {"multiplicative_abelian", r.multiplicative_abelian},
            {"multiplicative_cyclic", r.multiplicative_cyclic},
            {"ker_lambda", r.ker_lambda.elements()},
            {"socle", r.socle.elements()},
            {"centre", r.centre.elements()},
            {"central_series", r.central_series},
            {"central_class", opt(r.central_class)},
            {"socle_series", r.socle_series},
            {"multipermutation_level", opt(r.multipermutation_level)},
            {"left_star_series", r.left_star_series},
            {"left_nilpotent", r.left_nilpotent},
            {"right_star_series", r.right_star_series},
            {"right_nilpotent", r.right_nilpotent},
            {"derived_series", r.derived_series},
            {"soluble", r.soluble},
            {"supersoluble", r.supersoluble},
            {"dedekind", r.dedekind},
            {"sub_brace_count", r.sub_brace_count},
            {"ideal_count", r.ideal_count}};
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::io_error, "cannot open '" + path + "'");
    }
    try {
      return Json::parse(in);
    } catch (Json::parse_error const& e) {
      throw Error(ErrorKind::schema_error,
                  "'" + path + "' is not valid JSON at byte " + std::to_string(e.byte));
    }
  }

  void write_json_file(std::string const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorKind::io_error, "cannot write '" + path + "'");
    }
    out << j.dump(2) << '\n';
    if (!out) {
      throw Error(ErrorKind::io_error, "write to '" + path + "' failed");
    }
  }

  SkewBrace load_brace(std::string const& path) {
    return brace_from_json(read_json_file(path));
  }

  void save_brace(SkewBrace const& B, std::string const& path) {
    write_json_file(path, brace_to_json(B));
  }

  SetSolution load_solution(std::string const& path) {
    return solution_from_json(read_json_file(path));
  }

  void save_solution(SetSolution const& S, std::string const& path) {
    write_json_file(path, solution_to_json(S));
  }

}  // namespace skewbrace
