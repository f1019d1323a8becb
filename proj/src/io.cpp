#include "sadic/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sadic {

namespace {

template <typename S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  throw FormatError("matrix entry must be a string or an integer: " + v.dump());
}

template <typename S>
Matrix<S> matrix_from(const Json& j, S (*parse)(const std::string&)) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw FormatError("matrix rows must be nonempty arrays");
  Matrix<S> m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("matrix rows have unequal lengths");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse(scalar_text(j[r][c]));
  }
  return m;
}

BigInt parse_int(const std::string& s) {
  try {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) throw std::invalid_argument(s);
    return BigInt(s);
  } catch (const std::exception&) {
    throw FormatError("not an integer: '" + s + "'");
  }
}

Rational parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw FormatError("zero denominator: '" + s + "'");
  if (den < 0) {  // the gmp_rational constructor expects a positive denominator
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Json repeat_json(const std::optional<std::size_t>& from) {
  if (!from) return nullptr;
  return Json{{"from", *from}};
}

std::optional<std::size_t> repeat_from_json(const Json& j) {
  if (!j.contains("repeat") || j["repeat"].is_null()) return std::nullopt;
  const Json& r = j["repeat"];
  if (r.is_number_unsigned() || r.is_number_integer()) return r.get<std::size_t>();
  if (r.is_object() && r.contains("from")) return r["from"].get<std::size_t>();
  throw FormatError("repeat must be {\"from\": s}");
}

Json scalars_json(const std::map<std::size_t, BigInt>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = to_string(v);
  return o;
}

std::map<std::size_t, BigInt> scalars_from(const Json& o) {
  std::map<std::size_t, BigInt> m;
  for (auto it = o.begin(); it != o.end(); ++it) m[std::stoul(it.key())] = parse_int(scalar_text(it.value()));
  return m;
}

template <typename S>
Json matrices_json(const std::vector<Matrix<S>>& v) {
  Json a = Json::array();
  for (const auto& m : v) a.push_back(matrix_json(m));
  return a;
}

std::vector<IntMatrix> int_matrices(const Json& a) {
  std::vector<IntMatrix> v;
  for (const auto& m : a) v.push_back(int_matrix_from_json(m));
  return v;
}

std::string format_ld(long double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9Lg", x);
  return buf;
}

}  // namespace

Json to_json(const IntMatrix& m) { return matrix_json(m); }
Json to_json(const RatMatrix& m) { return matrix_json(m); }
IntMatrix int_matrix_from_json(const Json& j) { return matrix_from<BigInt>(j, &parse_int); }
RatMatrix rat_matrix_from_json(const Json& j) { return matrix_from<Rational>(j, &parse_rat); }

Json to_json(const Morphism& tau) {
  Json j;
  j["domain"] = tau.domain_size();
  j["codomain"] = tau.codomain_size();
  std::uint64_t total = 0;
  for (const auto& img : tau.images()) total += length(img);
  Json images = Json::array();
  if (total <= kPlainImageLimit) {
    for (const auto& img : tau.images()) {
      Json w = Json::array();
      for (const auto& run : img)
        for (std::uint64_t k = 0; k < run.count; ++k) w.push_back(run.letter + 1);
      images.push_back(std::move(w));
    }
    j["images"] = std::move(images);
  } else {
    for (const auto& img : tau.images()) {
      Json w = Json::array();
      for (const auto& run : img) w.push_back(Json::array({run.letter + 1, run.count}));
      images.push_back(std::move(w));
    }
    j["images_rle"] = std::move(images);
  }
  return j;
}

Morphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("codomain")) throw FormatError("morphism needs \"codomain\"");
  const auto codomain = j["codomain"].get<std::size_t>();
  std::vector<RleWord> images;
  auto letter = [&](const Json& v) -> Letter {
    const auto x = v.get<long long>();
    if (x < 1 || static_cast<std::size_t>(x) > codomain)
      throw FormatError("letter " + std::to_string(x) + " outside 1.." + std::to_string(codomain));
    return static_cast<Letter>(x - 1);
  };
  if (j.contains("images")) {
    for (const auto& w : j["images"]) {
      RleWord r;
      for (const auto& v : w) append_run(r, letter(v), 1);
      images.push_back(std::move(r));
    }
  } else if (j.contains("images_rle")) {
    for (const auto& w : j["images_rle"]) {
      RleWord r;
      for (const auto& run : w) {
        if (!run.is_array() || run.size() != 2) throw FormatError("run must be [letter, count]");
        append_run(r, letter(run[0]), run[1].get<std::uint64_t>());
      }
      images.push_back(std::move(r));
    }
  } else {
    throw FormatError("morphism needs \"images\" or \"images_rle\"");
  }
  if (j.contains("domain") && j["domain"].get<std::size_t>() != images.size())
    throw FormatError("morphism \"domain\" does not match the number of images");
  try {
    return Morphism(codomain, std::move(images));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const BratteliDiagram& d) {
  Json j;
  Json sizes = Json::array();
  sizes.push_back(1);
  for (const auto& a : d.incidences()) sizes.push_back(a.rows());
  j["level_sizes"] = sizes;
  j["incidences"] = matrices_json(d.incidences());
  if (d.periodic()) j["repeat"] = repeat_json(d.repeat_from());
  if (d.order()) {
    Json o = Json::array();
    for (const auto& tau : *d.order()) o.push_back(to_json(tau));
    j["order"] = std::move(o);
  }
  return j;
}

BratteliDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("incidences")) throw FormatError("diagram needs \"incidences\"");
  std::vector<IntMatrix> mats = int_matrices(j["incidences"]);
  if (j.contains("level_sizes")) {
    const auto& sizes = j["level_sizes"];
    if (sizes.size() != mats.size() + 1) throw FormatError("level_sizes must list one more level than incidences");
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (sizes[i].get<long long>() != mats[i].cols() || sizes[i + 1].get<long long>() != mats[i].rows())
        throw FormatError("incidence " + std::to_string(i) + " does not match level_sizes");
    }
  }
  try {
    BratteliDiagram d(std::move(mats), repeat_from_json(j));
    if (j.contains("order")) {
      std::vector<Morphism> order;
      for (const auto& m : j["order"]) order.push_back(morphism_from_json(m));
      d.set_order(std::move(order));
    }
    return d;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("invalid diagram: ") + e.what());
  }
}

Json to_json(const DirectiveSequence& ds) {
  Json j;
  Json ms = Json::array();
  for (const auto& m : ds.stored()) ms.push_back(to_json(m));
  j["morphisms"] = std::move(ms);
  if (ds.periodic()) j["repeat"] = repeat_json(ds.repeat_from());
  return j;
}

DirectiveSequence directive_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("morphisms")) throw FormatError("directive sequence needs \"morphisms\"");
  std::vector<Morphism> ms;
  for (const auto& m : j["morphisms"]) ms.push_back(morphism_from_json(m));
  try {
    return DirectiveSequence(std::move(ms), repeat_from_json(j));
  } catch (const std::exception& e) {
    throw FormatError(std::string("invalid directive sequence: ") + e.what());
  }
}

Json to_json(const ConstructionResult& res) {
  Json j;
  j["mode"] = mode_name(res.mode);
  j["target"] = res.target;
  j["depth"] = res.depth;
  j["status"] = res.failed ? "FAILED" : "OK";
  if (res.failed) j["failure"] = res.failure;
  j["divisible_asserted"] = res.divisible_asserted;
  j["input"] = to_json(res.input);
  j["cuts"] = res.cuts;
  j["a"] = matrices_json(res.a);
  j["split_b"] = matrices_json(res.split_b);
  j["split_c"] = matrices_json(res.split_c);
  j["a_prime"] = matrices_json(res.a_prime);
  j["j"] = matrices_json(res.j);
  j["final"] = matrices_json(res.final);
  Json sc = Json::object();
  if (!res.h.empty()) sc["h"] = scalars_json(res.h);
  if (!res.t.empty()) sc["t"] = scalars_json(res.t);
  if (!res.k.empty()) sc["k"] = scalars_json(res.k);
  if (!res.s.empty()) sc["s"] = scalars_json(res.s);
  if (!res.ell.empty()) sc["ell"] = scalars_json(res.ell);
  j["scalars"] = std::move(sc);
  if (!res.failed) {
    j["diagram"] = to_json(res.final_diagram);
    j["directive"] = to_json(res.sequence);
  }
  Json diags = Json::array();
  for (const auto& d : res.diagnostics)
    diags.push_back({{"level", d.level}, {"condition", d.condition}, {"value", d.value}, {"pass", d.pass}, {"gating", d.gating}});
  j["diagnostics"] = std::move(diags);
  return j;
}

ConstructionResult result_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mode")) throw FormatError("not a construction result");
  try {
    ConstructionResult res;
    res.mode = parse_mode(j.at("mode").get<std::string>());
    res.target = j.at("target").get<std::string>();
    res.depth = j.at("depth").get<std::size_t>();
    res.failed = j.at("status").get<std::string>() == "FAILED";
    if (j.contains("failure")) res.failure = j["failure"].get<std::string>();
    res.divisible_asserted = j.value("divisible_asserted", false);
    res.input = diagram_from_json(j.at("input"));
    res.cuts = j.at("cuts").get<std::vector<std::size_t>>();
    res.a = int_matrices(j.at("a"));
    res.split_b = int_matrices(j.at("split_b"));
    res.split_c = int_matrices(j.at("split_c"));
    res.a_prime = int_matrices(j.at("a_prime"));
    for (const auto& m : j.at("j")) res.j.push_back(rat_matrix_from_json(m));
    res.final = int_matrices(j.at("final"));
    const Json& sc = j.at("scalars");
    if (sc.contains("h")) res.h = scalars_from(sc["h"]);
    if (sc.contains("t")) res.t = scalars_from(sc["t"]);
    if (sc.contains("k")) res.k = scalars_from(sc["k"]);
    if (sc.contains("s")) res.s = scalars_from(sc["s"]);
    if (sc.contains("ell")) res.ell = scalars_from(sc["ell"]);
    if (!res.failed) {
      res.final_diagram = diagram_from_json(j.at("diagram"));
      res.sequence = directive_from_json(j.at("directive"));
    }
    for (const auto& d : j.at("diagnostics"))
      res.diagnostics.push_back({d.at("level").get<std::size_t>(), d.at("condition").get<std::string>(),
                                 d.at("value").get<std::string>(), d.at("pass").get<bool>(), d.value("gating", true)});
    const std::size_t L = res.depth;
    if (!res.failed && (res.a.size() < L || res.split_b.size() < L || res.a_prime.size() < L ||
                        res.final.size() != L || res.j.size() != L + 1))
      throw FormatError("construction result: matrix lists do not match depth " + std::to_string(L));
    return res;
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("construction result: ") + e.what());
  }
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["pass"] = rep.pass;
  j["skipped"] = rep.skipped;
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"gating", c.gating}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  if (rep.skipped) return j;
  j["profile"] = {{"N", rep.profile.horizon()},
                  {"level_used", rep.profile.level_used},
                  {"stabilized_at", rep.profile.stabilized_at},
                  {"stabilized", rep.profile.stabilized},
                  {"text_length", rep.profile.text_length}};
  Json dec = Json::array();
  for (auto x : rep.decade_max) dec.push_back(format_ld(x));
  j["decade_max"] = std::move(dec);
  j["decades_decreasing"] = rep.decades_decreasing;
  j["boshernitzan"] = {{"alpha_estimate", to_string(rep.boshernitzan.alpha_estimate)},
                       {"measure_bound", to_string(rep.boshernitzan.measure_bound)},
                       {"argmin", rep.boshernitzan.argmin}};
  if (rep.toeplitz) {
    Json cands = Json::array();
    for (auto q : rep.toeplitz_candidates) cands.push_back(q);
    j["toeplitz"] = {{"window", rep.toeplitz->window},
                     {"candidates", cands},
                     {"verified", rep.toeplitz->verified},
                     {"open", rep.toeplitz->open},
                     {"refuted", rep.toeplitz->refuted},
                     {"flag", rep.toeplitz->flag}};
  }
  Json rec = Json::array();
  for (std::size_t k = 0; k < rep.recognizability.size(); ++k) {
    const auto& r = rep.recognizability[k];
    rec.push_back({{"level", k + 1},
                   {"alphabet_size", r.alphabet_size},
                   {"marker", r.marker.holds},
                   {"interior_occurrences", r.marker.interior_occurrences},
                   {"words_checked", r.decoding.words_checked},
                   {"ambiguous", r.decoding.ambiguous}});
  }
  j["recognizability"] = std::move(rec);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw FormatError("'" + path + "' is empty");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_profile_csv(std::ostream& out, const ComplexityProfile& profile, const ComplexityTarget* target,
                       const std::vector<std::optional<BoundValue>>& bounds) {
  out << "n,p,target,bound,ratio\n";
  for (std::uint64_t n = 1; n <= profile.horizon(); ++n) {
    const std::uint64_t p = profile.at(n);
    out << n << ',' << p << ',';
    const bool has_target = target && target->defined_at(n);
    if (has_target) out << format_ld(target->approx(n));
    out << ',';
    if (n - 1 < bounds.size() && bounds[n - 1]) out << to_string(bounds[n - 1]->bound);
    out << ',';
    if (has_target) out << format_ld(static_cast<long double>(p) / target->approx(n));
    out << '\n';
  }
}

void write_toeplitz_csv(std::ostream& out, const ToeplitzReport& rep) {
  out << "position,period\n";
  for (std::size_t p = 0; p < rep.status.size(); ++p) {
    out << p << ',';
    if (rep.status[p] == PositionStatus::Verified)
      out << rep.period[p];
    else
      out << "unverified";
    out << '\n';
  }
}

}  // namespace sadic
