#pragma once

// Command-line front end. Exit codes: 0 success, 1 negative verdict (not a
// GAP, not standard, failed verification), 2 input error, 3 budget refusal.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "golay/census.hpp"
#include "golay/decompose.hpp"
#include "golay/io.hpp"
#include "golay/qarray.hpp"
#include "golay/standard.hpp"

namespace golay::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3 };

namespace detail {

inline std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string join(const std::vector<int>& v, int offset = 0) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + offset);
  return s;
}

inline std::string describe(const StandardParams& p) {
  return "pi=[" + join(p.pi, 1) + "] c=[" + join(p.c) + "] c0=" + std::to_string(p.c0) + " c_prime=" + std::to_string(p.c_prime);
}

struct Settings {
  std::string input;
  std::string output;
  std::string format;
  int q = 0;
  int m = 0;
  std::uint64_t budget = kDefaultCensusBudget;
  int workers = 1;
};

class Runner {
 public:
  Runner(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

  int construct() {
    Json j = parse_json(read_text(s_.input));
    if (j.is_object() && j.contains("params")) j = j.at("params");
    const ArrayPair p = construct_standard(params_from_json(j));
    if (format("json") == "text")
      emit("f: " + join(p.f.entries()) + "\ng: " + join(p.g.entries()) + "\n");
    else
      emit(to_json(p).dump(2) + "\n");
    return kOk;
  }

  int verify() {
    const Json j = parse_json(read_text(s_.input));
    ArrayPair pair{QaryArray(2, 0, {0}), QaryArray(2, 0, {0})};
    if (j.is_object() && j.contains("certificate")) {
      const CertificateNode cert = certificate_from_json(j.at("certificate"));
      try {
        pair = replay(cert);
      } catch (const VerificationError& e) {
        emit(std::string("certificate invalid: ") + e.what() + "\n");
        return kNegative;
      }
    } else {
      pair = pair_from_json(j);
    }

    const bool gap = is_gap(pair.f, pair.g);
    std::optional<StandardParams> params;
    if (gap && (pair.f.m() == 0 || pair.f.q() % 2 == 0)) params = recognize_standard(pair.f, pair.g);

    if (format("text") == "json") {
      emit(Json{{"gap", gap}, {"standard", params.has_value()}, {"params", params ? to_json(*params) : Json(nullptr)}}.dump(2) + "\n");
    } else if (!gap) {
      emit("not a GAP\n");
    } else if (params) {
      emit("GAP; standard; pi=[" + join(params->pi, 1) + "]\n");
    } else {
      emit("GAP; not standard\n");
    }
    return gap && params ? kOk : kNegative;
  }

  int decompose_pair() {
    const ArrayPair pair = pair_from_json(parse_json(read_text(s_.input)));
    const Decomposition d = decompose(pair.f, pair.g);
    if (format("json") == "text")
      emit(describe(d.params) + "\n");
    else
      emit(to_json(d).dump(2) + "\n");
    return kOk;
  }

  int project() {
    const QaryArray f = array_from_json(parse_json(read_text(s_.input)));
    const std::vector<int> seq = project_sequence(f);
    if (format("text") == "json")
      emit(Json(seq).dump() + "\n");
    else
      emit(join(seq) + "\n");
    return kOk;
  }

  int census() {
    const CensusReport r = verify_theorem(s_.q, s_.m, CensusOptions{s_.budget, s_.workers});
    err_ << "census q=" << r.q << " m=" << r.m << ": " << r.elapsed.count() << " s\n";
    if (format("json") == "text") {
      std::ostringstream ss;
      ss << "q=" << r.q << " m=" << r.m << "\n"
         << "total_arrays=" << r.total_arrays << "\n"
         << "gap_pair_count=" << r.gap_pair_count << "\n"
         << "standard_pair_count=" << r.standard_pair_count << "\n"
         << "all_standard=" << (r.all_standard ? "true" : "false") << "\n"
         << "nonstandard_witnesses=" << r.nonstandard_witnesses.size() << "\n";
      emit(ss.str());
    } else {
      emit(to_json(r).dump(2) + "\n");
    }
    return r.all_standard ? kOk : kNegative;
  }

 private:
  std::string format(const char* fallback) const { return s_.format.empty() ? fallback : s_.format; }

  void emit(const std::string& text) {
    if (s_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(s_.output, std::ios::binary);
    if (!f || !(f << text)) throw FormatError("cannot write " + s_.output);
  }

  const Settings& s_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Settings s;
  CLI::App app{"Construct, verify, decompose and census q-ary Golay complementary array pairs of size 2^(m).", "golay"};
  app.require_subcommand(1, 1);

  auto common = [&s](CLI::App* sub) {
    sub->add_option("--output,-o", s.output, "Write the result to PATH instead of stdout");
    sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto* construct = app.add_subcommand("construct", "Build the standard pair for a parameter file");
  construct->add_option("params", s.input, "StandardParams JSON ('-' for stdin)")->required();
  common(construct);
  auto* verify = app.add_subcommand("verify", "GAP verdict and standard-form recognition for a pair or certificate");
  verify->add_option("pair", s.input, "Pair JSON or decompose output ('-' for stdin)")->required();
  common(verify);
  auto* decompose = app.add_subcommand("decompose", "Standard parameters and certificate for a GAP");
  decompose->add_option("pair", s.input, "Pair JSON ('-' for stdin)")->required();
  common(decompose);
  auto* project = app.add_subcommand("project", "Project an array to its length-2^m sequence");
  project->add_option("array", s.input, "Array JSON ('-' for stdin)")->required();
  common(project);
  auto* census = app.add_subcommand("census", "Enumerate every GAP for (q, m) and check that all are standard");
  census->add_option("q", s.q, "Alphabet size")->required()->check(CLI::Range(1, kMaxModulus));
  census->add_option("m", s.m, "Dimension")->required()->check(CLI::Range(0, kMaxDimension));
  census->add_option("--budget", s.budget, "Maximum number of arrays to enumerate");
  census->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1, 1024));
  common(census);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  detail::Runner runner(s, out, err);
  try {
    if (*construct) return runner.construct();
    if (*verify) return runner.verify();
    if (*decompose) return runner.decompose_pair();
    if (*project) return runner.project();
    return runner.census();
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const NotAGapError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace golay::cli
