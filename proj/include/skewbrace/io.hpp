#ifndef SKEWBRACE_IO_HPP_
#define SKEWBRACE_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "brace.hpp"
#include "group.hpp"
#include "series.hpp"
#include "ybe.hpp"

namespace skewbrace {

  using Json = nlohmann::json;

  // Schemas:
  //   group     {"order": n, "table": [[...], ...]}
  //   brace     {"order": n, "add": [[...]], "mul": [[...]], "labels": [...]?}
  //   solution  {"size": n, "lambda": [[...]], "rho": [[...]]}
  // Decoding throws schema_error naming the field; the tables are then
  // validated by the algebraic constructors.

  Json        group_to_json(FiniteGroup const& G);
  FiniteGroup group_from_json(Json const& j);

  Json      brace_to_json(SkewBrace const& B, std::vector<std::string> const& labels = {});
  SkewBrace brace_from_json(Json const& j);

  Json        solution_to_json(SetSolution const& S);
  SetSolution solution_from_json(Json const& j);

  Json report_to_json(AnalysisReport const& r);

  // Throws io_error when the file cannot be opened and schema_error with
  // the parser position on malformed JSON.
  Json read_json_file(std::string const& path);
  void write_json_file(std::string const& path, Json const& j);

  SkewBrace   load_brace(std::string const& path);
  void        save_brace(SkewBrace const& B, std::string const& path);
  SetSolution load_solution(std::string const& path);
  void        save_solution(SetSolution const& S, std::string const& path);

}  // namespace skewbrace

#endif  // SKEWBRACE_IO_HPP_
