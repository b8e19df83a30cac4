#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kronkit/error.hpp"
#include "kronkit/io.hpp"
#include "kronkit/marginals.hpp"
#include "kronkit/oracle.hpp"
#include "kronkit/ressayre.hpp"
#include "kronkit/search.hpp"

namespace kronkit::cli {

namespace {

using nlohmann::json;

CommandResult result(int code, std::string report, std::string payload = {}) {
  return {code, std::move(report), std::move(payload)};
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::string instance_note(const KronInstance& inst) {
  std::ostringstream os;
  os << "instance (" << inst.lambda(Subsystem::A).str() << ")(" << inst.lambda(Subsystem::B).str() << ")("
     << inst.lambda(Subsystem::C).str() << ") k=" << inst.k() << " m=" << inst.m();
  if (inst.rank_overridden()) os << " [rank overridden]";
  return os.str();
}

json verdict_json(const Verdict& v) {
  return {{"decision", std::string(to_string(v.decision))}, {"reason", std::string(to_string(v.reason))}};
}

CommandResult verify_nonmembership_cmd(const std::string& instance_path, const std::string& cert_path) {
  const KronInstance inst = io::parse_instance(io::read_file(instance_path));
  const RessayreCertificate cert = io::parse_ressayre(io::read_file(cert_path));
  const Verdict v = verify_nonmembership(inst, cert);

  const Integer lhs = pair_with_instance(cert.hz, inst);
  const Integer rhs = cert.hz.z * inst.k();
  std::ostringstream os;
  os << instance_note(inst) << "\n";
  os << to_string(v.decision) << ": " << to_string(v.reason) << "\n";
  os << "H . lambda = " << lhs.get_str() << (lhs < rhs ? " < " : " >= ") << "k z = " << rhs.get_str() << "\n";

  json payload = verdict_json(v);
  payload["H_dot_lambda"] = lhs.get_str();
  payload["kz"] = rhs.get_str();
  return result(v.accepted() ? kAccept : kReject, os.str(), payload.dump());
}

CommandResult verify_membership_cmd(const std::string& instance_path, const std::string& cert_path) {
  const KronInstance inst = io::parse_instance(io::read_file(instance_path));
  const MembershipCertificate cert = io::parse_membership(io::read_file(cert_path));
  const MembershipReport rep = check_membership(inst, cert);

  std::ostringstream os;
  os << instance_note(inst) << "\n";
  os << to_string(rep.verdict.decision) << ": " << to_string(rep.verdict.reason) << "\n";
  os << "gap^2 = " << rep.gap2.str() << "\nthreshold^2 = " << rep.threshold2.str() << "\n";

  json payload = verdict_json(rep.verdict);
  payload["gap2"] = rep.gap2.str();
  payload["threshold2"] = rep.threshold2.str();
  return result(rep.verdict.accepted() ? kAccept : kReject, os.str(), payload.dump());
}

CommandResult find_witness_cmd(const std::string& instance_path, const WitnessOptions& opts) {
  const KronInstance inst = io::parse_instance(io::read_file(instance_path));
  const auto cert = search_witness(inst, opts);
  if (!cert) return result(kReject, instance_note(inst) + "\nNotFound\n");
  return result(kAccept, instance_note(inst) + "\nfound a certificate accepted by the verifier\n", io::to_json(*cert));
}

CommandResult facets_cmd(int m, bool irredundant, const EnumerationOptions& opts) {
  FacetSystem fs = enumerate_ressayre(m, opts);
  const std::size_t found = fs.nontrivial.size();
  if (irredundant) fs = reduce_irredundant(fs);
  std::ostringstream os;
  os << "m=" << m << ": " << found << " Ressayre elements";
  if (irredundant) os << ", " << fs.nontrivial.size() << " irredundant";
  os << ", " << fs.chamber.size() << " chamber inequalities\n";
  return result(kAccept, os.str(), io::to_json(fs));
}

CommandResult kron_cmd(const std::string& a, const std::string& b, const std::string& c) {
  const Integer g = kron_coeff(parse_young(a), parse_young(b), parse_young(c));
  return result(g > 0 ? kAccept : kReject, "g((" + a + "),(" + b + "),(" + c + ")) = " + g.get_str() + "\n",
                g.get_str());
}

CommandResult member_cmd(const std::string& instance_path, int l_max, int cap) {
  const KronInstance inst = io::parse_instance(io::read_file(instance_path));
  const auto l = semigroup_member(inst, l_max, cap);
  if (!l) {
    return result(kReject, instance_note(inst) + "\nUnknown: g(l lambda) = 0 for all l <= " + std::to_string(l_max) + "\n",
                  json{{"member", "Unknown"}}.dump());
  }
  return result(kAccept, instance_note(inst) + "\nYes: g(l lambda) > 0 at l = " + std::to_string(*l) + "\n",
                json{{"member", "Yes"}, {"l", *l}}.dump());
}

CommandResult sample_cmd(int m, std::size_t n, std::uint64_t seed) {
  if (m < 1 || m > kDefaultMaxRank) throw Error(Errc::RankTooLarge, "m must be in 1.." + std::to_string(kDefaultMaxRank));
  return result(kAccept, std::to_string(n) + " spectrum triples for m=" + std::to_string(m) + "\n",
                io::to_csv(sample_spectra(m, n, seed)));
}

int threads_from_env() {
  const char* env = std::getenv("KRONKIT_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  int v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || ptr != end || v < 1) throw Error(Errc::ParseError, std::string("bad KRONKIT_THREADS: ") + env);
  return v;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Certificates for membership in Kronecker polytopes", "kronkit"};
  app.require_subcommand(1);
  std::function<CommandResult()> action;
  std::string out_path;

  std::string instance_path;
  std::string cert_path;

  auto* vn = app.add_subcommand("verify-nonmembership", "Check a (H, z, p) certificate that lambda/k lies outside");
  vn->add_option("instance", instance_path, "instance JSON")->required();
  vn->add_option("certificate", cert_path, "certificate JSON")->required();
  vn->callback([&] { action = [&] { return verify_nonmembership_cmd(instance_path, cert_path); }; });

  auto* vm = app.add_subcommand("verify-membership", "Check a state vector certificate that lambda/k lies inside");
  vm->add_option("instance", instance_path, "instance JSON")->required();
  vm->add_option("certificate", cert_path, "certificate JSON")->required();
  vm->callback([&] { action = [&] { return verify_membership_cmd(instance_path, cert_path); }; });

  WitnessOptions wopts;
  auto* fw = app.add_subcommand("find-witness", "Search for a membership certificate");
  fw->add_option("instance", instance_path, "instance JSON")->required();
  fw->add_option("--seed", wopts.seed, "random seed");
  fw->add_option("--max-iters", wopts.max_iters, "descent steps per restart")->check(CLI::PositiveNumber);
  fw->add_option("--restarts", wopts.restarts, "random restarts")->check(CLI::PositiveNumber);
  fw->add_option("--out", out_path, "write the certificate here instead of stdout");
  fw->callback([&] { action = [&] { return find_witness_cmd(instance_path, wopts); }; });

  int m = 0;
  bool irredundant = false;
  EnumerationOptions eopts;
  std::optional<int> threads;
  auto* fa = app.add_subcommand("facets", "Enumerate Ressayre elements of Kron(m)");
  fa->add_option("--m", m, "rank")->required();
  fa->add_option("--budget", eopts.budget, "maximal number of weight subsets");
  fa->add_option("--max-rank", eopts.max_rank, "enumeration cap on m");
  fa->add_option("--seed", eopts.seed, "seed for the nonvanishing-point search");
  fa->add_option("--threads", threads, "worker threads (default: $KRONKIT_THREADS or 1)")->check(CLI::PositiveNumber);
  fa->add_flag("--irredundant", irredundant, "drop inequalities implied by the others");
  fa->add_option("--out", out_path, "write the facet system here instead of stdout");
  fa->callback([&] {
    action = [&] {
      eopts.threads = threads ? *threads : threads_from_env();
      return facets_cmd(m, irredundant, eopts);
    };
  });

  std::string la, lb, lc;
  auto* kr = app.add_subcommand("kron", "Kronecker coefficient g(A, B, C)");
  kr->add_option("A", la, "diagram such as 2,1")->required();
  kr->add_option("B", lb, "diagram")->required();
  kr->add_option("C", lc, "diagram")->required();
  kr->callback([&] { action = [&] { return kron_cmd(la, lb, lc); }; });

  int l_max = 4;
  int cap = kDefaultOracleCap;
  auto* mb = app.add_subcommand("member-bruteforce", "Smallest l <= lmax with g(l lambda) > 0");
  mb->add_option("instance", instance_path, "instance JSON")->required();
  mb->add_option("--lmax", l_max, "largest stretching factor")->check(CLI::PositiveNumber);
  mb->add_option("--cap", cap, "largest admissible l k")->check(CLI::PositiveNumber);
  mb->callback([&] { action = [&] { return member_cmd(instance_path, l_max, cap); }; });

  std::size_t n = 1000;
  std::uint64_t seed = 0;
  auto* sa = app.add_subcommand("sample", "Marginal spectra of random states as CSV");
  sa->add_option("--m", m, "rank")->required();
  sa->add_option("--n", n, "number of samples");
  sa->add_option("--seed", seed, "random seed");
  sa->add_option("--out", out_path, "write the CSV here instead of stdout");
  sa->callback([&] { action = [&] { return sample_cmd(m, n, seed); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return result(kAccept, {}, app.help());
  } catch (const CLI::CallForAllHelp&) {
    return result(kAccept, {}, app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    return result(kBadInput, std::string(e.what()) + "\n" + app.help());
  }

  try {
    CommandResult r = action();
    if (!out_path.empty() && !r.payload.empty()) {
      write_out(out_path, r.payload);
      r.report += "wrote " + out_path + "\n";
      r.payload.clear();
    }
    return r;
  } catch (const Error& e) {
    return result(kBadInput, std::string("error: ") + e.what() + "\n");
  } catch (const std::exception& e) {
    return result(kInternal, std::string("internal error: ") + e.what() + "\n");
  }
}

}  // namespace kronkit::cli
