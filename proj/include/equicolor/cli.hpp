#pragma once

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/solver.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace equicolor {

// Exit codes: 0 success, 1 negative mathematical answer, 2 usage or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name. `in` backs `--input -`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// {"m": m, "assignment": {"<id+1>": color}, "class_sizes": [...]}
nlohmann::ordered_json coloring_to_json(const Coloring& f);
Coloring coloring_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const Config& c);

}  // namespace equicolor
