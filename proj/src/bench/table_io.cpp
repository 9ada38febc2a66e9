#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "esnufft/bench.hpp"

namespace esnufft::bench {
namespace {

const char* const kColumns =
    "type,dim,dist,m,n,n1,n2,n3,tol,threads,reps,wall,sort,spread,interp,fft,correct,total,"
    "err,ref,status,message";
constexpr int kNumColumns = 22;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("bad number '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::runtime_error("bad integer '" + s + "'");
  return v;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> f(1);
  bool in_q = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (in_q) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        f.back() += '"';
        ++i;
      } else if (ch == '"') {
        in_q = false;
      } else {
        f.back() += ch;
      }
    } else if (ch == '"') {
      in_q = true;
    } else if (ch == ',') {
      f.emplace_back();
    } else {
      f.back() += ch;
    }
  }
  if (in_q) throw std::runtime_error("unterminated quote in CSV row");
  return f;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << kSchemaHeader << '\n' << kColumns << '\n';
  for (const Row& r : rows) {
    os << r.type << ',' << r.dim << ',' << quote(r.dist) << ',' << r.m << ',' << r.n << ','
       << r.n1 << ',' << r.n2 << ',' << r.n3 << ',' << num(r.tol) << ',' << r.threads << ','
       << r.reps << ',' << num(r.wall) << ',' << num(r.sort) << ',' << num(r.spread) << ','
       << num(r.interp) << ',' << num(r.fft) << ',' << num(r.correct) << ',' << num(r.total)
       << ',' << num(r.err) << ',' << quote(r.ref) << ',' << r.status << ','
       << quote(r.message) << '\n';
  }
}

std::vector<Row> read_csv(std::istream& is) {
  std::vector<Row> rows;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kColumns) throw std::runtime_error("unexpected CSV header");
      header = true;
      continue;
    }
    const auto f = split_csv(line);
    if (static_cast<int>(f.size()) != kNumColumns)
      throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields");
    Row r;
    r.type = static_cast<int>(parse_int(f[0]));
    r.dim = static_cast<int>(parse_int(f[1]));
    r.dist = f[2];
    r.m = parse_int(f[3]);
    r.n = parse_int(f[4]);
    r.n1 = parse_int(f[5]);
    r.n2 = parse_int(f[6]);
    r.n3 = parse_int(f[7]);
    r.tol = parse_double(f[8]);
    r.threads = static_cast<int>(parse_int(f[9]));
    r.reps = static_cast<int>(parse_int(f[10]));
    r.wall = parse_double(f[11]);
    r.sort = parse_double(f[12]);
    r.spread = parse_double(f[13]);
    r.interp = parse_double(f[14]);
    r.fft = parse_double(f[15]);
    r.correct = parse_double(f[16]);
    r.total = parse_double(f[17]);
    r.err = parse_double(f[18]);
    r.ref = f[19];
    r.status = static_cast<int>(parse_int(f[20]));
    r.message = f[21];
    rows.push_back(std::move(r));
  }
  if (!header) throw std::runtime_error("missing CSV header");
  return rows;
}

void write_jsonl(std::ostream& os, const std::vector<Row>& rows) {
  for (const Row& r : rows) {
    nlohmann::json j = {
        {"type", r.type},     {"dim", r.dim},         {"dist", r.dist},     {"m", r.m},
        {"n", r.n},           {"n1", r.n1},           {"n2", r.n2},         {"n3", r.n3},
        {"tol", r.tol},       {"threads", r.threads}, {"reps", r.reps},     {"wall", r.wall},
        {"sort", r.sort},     {"spread", r.spread},   {"interp", r.interp}, {"fft", r.fft},
        {"correct", r.correct}, {"total", r.total},   {"ref", r.ref},       {"status", r.status},
        {"message", r.message}, {"schema", 1}};
    j["err"] = std::isnan(r.err) ? nlohmann::json(nullptr) : nlohmann::json(r.err);
    os << j.dump() << '\n';
  }
}

std::vector<Row> read_jsonl(std::istream& is) {
  std::vector<Row> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    if (j.at("schema").get<int>() != 1) throw std::runtime_error("unknown schema version");
    Row r;
    j.at("type").get_to(r.type);
    j.at("dim").get_to(r.dim);
    j.at("dist").get_to(r.dist);
    j.at("m").get_to(r.m);
    j.at("n").get_to(r.n);
    j.at("n1").get_to(r.n1);
    j.at("n2").get_to(r.n2);
    j.at("n3").get_to(r.n3);
    j.at("tol").get_to(r.tol);
    j.at("threads").get_to(r.threads);
    j.at("reps").get_to(r.reps);
    j.at("wall").get_to(r.wall);
    j.at("sort").get_to(r.sort);
    j.at("spread").get_to(r.spread);
    j.at("interp").get_to(r.interp);
    j.at("fft").get_to(r.fft);
    j.at("correct").get_to(r.correct);
    j.at("total").get_to(r.total);
    r.err = j.at("err").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                  : j.at("err").get<double>();
    j.at("ref").get_to(r.ref);
    j.at("status").get_to(r.status);
    j.at("message").get_to(r.message);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace esnufft::bench
