#include "treefit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace treefit::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
    if (start == text.size() + 1) break;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, const char* what) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(std::string("failed to parse ") + what + ": '" + std::string(token) + "'");
  return value;
}

long long parse_integer(std::string_view token, const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(std::string("failed to parse ") + what + ": '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(sep, start);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(start, end - start));
    if (end == line.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  require(ec == std::errc{}, "format_double failed");
  return std::string(buf, ptr);
}

DistanceMatrix parse_distance_csv(std::string_view text) {
  const auto lines = split_lines(text);
  const int n = static_cast<int>(lines.size());
  std::vector<std::vector<double>> rows(n);
  for (int i = 0; i < n; ++i) {
    const auto cells = split(lines[i], ',');
    require(static_cast<int>(cells.size()) == n,
            "distance csv: expected " + std::to_string(n) + " columns, got " +
                std::to_string(cells.size()) + " in row " + std::to_string(i));
    rows[i].reserve(n);
    for (const auto& cell : cells) rows[i].push_back(parse_number(cell, "distance entry"));
  }
  // Validate within tolerance, then symmetrize by averaging.
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i) {
    require(std::abs(rows[i][i]) <= 1e-9, "distance csv: nonzero diagonal at row " +
                                              std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      require(std::abs(rows[i][j] - rows[j][i]) <= 1e-9,
              "distance csv: asymmetry beyond 1e-9 at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      const double v = 0.5 * (rows[i][j] + rows[j][i]);
      require(v >= 0.0, "distance csv: negative entry");
      d.set(i, j, v);
    }
  }
  return d;
}

std::string format_distance_csv(const DistanceMatrix& d) {
  std::string out;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) {
      if (j) out += ',';
      out += format_double(d(i, j));
    }
    out += '\n';
  }
  return out;
}

MergeLog parse_merge_log_csv(std::string_view text) {
  const auto lines = split_lines(text);
  require(!lines.empty() && lines[0] == "id_a,id_b,height,size,step",
          "merge log csv: missing header");
  MergeLog log;
  for (std::size_t t = 1; t < lines.size(); ++t) {
    const auto cells = split(lines[t], ',');
    require(cells.size() == 5, "merge log csv: expected 5 columns");
    MergeRow row;
    row.id_a = static_cast<int>(parse_integer(cells[0], "id_a"));
    row.id_b = static_cast<int>(parse_integer(cells[1], "id_b"));
    row.height = parse_number(cells[2], "height");
    row.size = static_cast<int>(parse_integer(cells[3], "size"));
    row.step = parse_integer(cells[4], "step");
    log.rows.push_back(row);
  }
  log.n = static_cast<int>(log.rows.size()) + 1;
  log.validate();
  return log;
}

std::string format_merge_log_csv(const MergeLog& log) {
  std::string out = "id_a,id_b,height,size,step\n";
  for (const auto& row : log.rows) {
    out += std::to_string(row.id_a) + ',' + std::to_string(row.id_b) + ',' +
           format_double(row.height) + ',' + std::to_string(row.size) + ',' +
           std::to_string(row.step) + '\n';
  }
  return out;
}

WeightedTree parse_tree(std::string_view text) {
  WeightedTree t;
  bool saw_root = false, saw_n = false;
  int max_node = -1;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    std::istringstream ss{std::string(line)};
    if (line.front() == '#') {
      std::string hash, key;
      ss >> hash >> key;
      long long value = 0;
      ss >> value;
      if (key == "root") {
        t.root = static_cast<int>(value);
        saw_root = true;
      } else if (key == "n") {
        t.n_points = static_cast<int>(value);
        saw_n = true;
      } else {
        fail("tree file: unknown header '" + std::string(line) + "'");
      }
      continue;
    }
    WeightedTree::Edge e;
    if (!(ss >> e.u >> e.v >> e.weight)) fail("tree file: bad edge line '" + std::string(line) + "'");
    std::string rest;
    if (ss >> rest) fail("tree file: trailing tokens on edge line");
    t.edges.push_back(e);
    max_node = std::max({max_node, e.u, e.v});
  }
  require(saw_root && saw_n, "tree file: missing '# root' or '# n' header");
  t.node_count = std::max(max_node + 1, t.n_points);
  t.validate();
  return t;
}

std::string format_tree(const WeightedTree& t) {
  std::string out = "# root " + std::to_string(t.root) + "\n# n " + std::to_string(t.n_points) + "\n";
  for (const auto& e : t.edges)
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + format_double(e.weight) + '\n';
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write file: " + path.string());
  out << content;
  require(static_cast<bool>(out), "write failed: " + path.string());
}

DistanceMatrix load_distance_csv(const std::filesystem::path& path) {
  return parse_distance_csv(read_file(path));
}
void save_distance_csv(const DistanceMatrix& d, const std::filesystem::path& path) {
  write_file(path, format_distance_csv(d));
}
MergeLog load_merge_log_csv(const std::filesystem::path& path) {
  return parse_merge_log_csv(read_file(path));
}
void save_merge_log_csv(const MergeLog& log, const std::filesystem::path& path) {
  write_file(path, format_merge_log_csv(log));
}
WeightedTree load_tree(const std::filesystem::path& path) { return parse_tree(read_file(path)); }
void save_tree(const WeightedTree& t, const std::filesystem::path& path) {
  write_file(path, format_tree(t));
}

}  // namespace treefit::io
