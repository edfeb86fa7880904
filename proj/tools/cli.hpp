#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idealtop::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;

/// Parses "{0,1}", "[0,1]", "0,1" or "{}" into sorted points. Throws
/// Error(Parse) on anything else.
std::vector<int> parse_point_list(std::string_view text);

int cmd_star(const std::string& space_file, std::string_view op, const std::optional<std::string>& subset,
             std::ostream& out);

int cmd_check(const std::string& instance_file, const std::vector<std::string>& theorems,
              const std::optional<std::string>& json_path, std::ostream& out);

struct SearchArgs {
  std::string theorem;
  std::vector<std::string> drop;
  int max_n = 3;
  std::optional<int> max_n_dom;
  std::optional<int> max_n_cod;
  int workers = 1;
  std::optional<std::string> json_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::string> dom_carriers;
  std::optional<std::string> cod_carriers;
  bool progress = true;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err);

int cmd_demo(std::string_view name, std::ostream& out);

int cmd_enumerate(std::string_view what, int n, std::optional<int> n_cod, bool count_only, std::ostream& out);

/// Full command line entry point; never throws.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace idealtop::cli
