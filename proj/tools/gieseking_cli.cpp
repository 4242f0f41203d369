// Command-line front end: solve / table / verify / render / limit /
// lobachevsky. Exit codes: 0 success, 1 verification or IO failure, 2 usage
// error. All numeric text output uses the C locale with '.' as the decimal
// separator; radians carry 12 fractional digits, degrees 2.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gieseking/holonomy.hpp"
#include "gieseking/ideal_simplex.hpp"
#include "gieseking/lobachevsky.hpp"
#include "gieseking/surgery.hpp"
#include "gieseking/tiling.hpp"

using namespace gieseking;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string fmt_complex(Complex z) {
  return fmt(z.real()) + (z.imag() < 0.0 ? " - " : " + ") + fmt(std::abs(z.imag())) +
         " i";
}

double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

/// Writes to --out when given, stdout otherwise; throws on IO failure.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
  if (!f) throw std::runtime_error("failed writing output file: " + out_path);
}

json solution_to_json(const SurgerySolution& s) {
  json j;
  j["branch"] = branch_name(s.branch);
  j["k"] = s.k;
  j["z_re"] = s.z.real();
  j["z_im"] = s.z.imag();
  j["alpha1"] = s.angles.alpha1;
  j["alpha2"] = s.angles.alpha2;
  j["alpha3"] = s.angles.alpha3;
  j["v_re"] = s.v.real();
  j["v_im"] = s.v.imag();
  j["phi"] = s.phi;
  j["volume"] = s.volume;
  j["classification"] = classification_name(s.classification);
  j["cone_angle"] = s.cone_angle;
  return j;
}

std::string solution_to_text(const SurgerySolution& s) {
  std::string t;
  t += "branch:         " + branch_name(s.branch) + "\n";
  t += "k:              " + std::to_string(s.k) + "\n";
  t += "z:              " + fmt_complex(s.z) + "\n";
  t += "alpha1:         " + fmt(s.angles.alpha1) + "  (" +
       fmt(degrees(s.angles.alpha1), 2) + " deg)\n";
  t += "alpha2:         " + fmt(s.angles.alpha2) + "  (" +
       fmt(degrees(s.angles.alpha2), 2) + " deg)\n";
  t += "alpha3:         " + fmt(s.angles.alpha3) + "  (" +
       fmt(degrees(s.angles.alpha3), 2) + " deg)\n";
  t += "v:              " + fmt_complex(s.v) + "\n";
  t += "phi:            " + fmt(s.phi) + "\n";
  t += "volume:         " + fmt(s.volume) + "\n";
  t += "classification: " + classification_name(s.classification) + "\n";
  t += "cone_angle:     " + fmt(s.cone_angle) + "\n";
  return t;
}

// ---------------------------------------------------------------------------
// table

struct TableRow {
  std::string k_label;
  std::optional<int> k;  // empty for the limit row
  Complex z;
  std::array<double, 3> angles;
  double volume;
  std::string classification;
};

std::string paper_label(Branch b, int k) {
  if (b == Branch::Gies1 || b == Branch::Gies2)
    return std::to_string(k - 1) + "/" + std::to_string(k) +
           " i.e. k=" + std::to_string(k);
  return "k=" + std::to_string(k);
}

TableRow row_for(Branch b, int k, bool fraction_labels) {
  const SurgerySolution s = solve(b, k);
  return {fraction_labels ? paper_label(b, k) : "k=" + std::to_string(k),
          k,
          s.z,
          {s.angles.alpha1, s.angles.alpha2, s.angles.alpha3},
          s.volume,
          classification_name(s.classification)};
}

TableRow limit_row(Branch b) {
  const BranchLimit l = limit(b);
  return {"k->infinity", std::nullopt, l.z_limit, l.angle_limits, l.volume_limit, ""};
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "k_label,k,z_re,z_im,alpha1,alpha2,alpha3,"
      "alpha1_deg,alpha2_deg,alpha3_deg,volume,classification\n";
  for (const auto& r : rows) {
    out += "\"" + r.k_label + "\",";
    out += (r.k ? std::to_string(*r.k) : "") + ",";
    out += fmt(r.z.real()) + "," + fmt(r.z.imag()) + ",";
    for (double a : r.angles) out += fmt(a) + ",";
    for (double a : r.angles) out += fmt(degrees(a), 2) + ",";
    out += fmt(r.volume) + "," + r.classification + "\n";
  }
  return out;
}

std::string table_markdown(Branch b, const std::vector<TableRow>& rows) {
  std::string out =
      "| " + branch_name(b) + " | z | angles (rad) | angles (deg) | volume | type |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out += "| " + r.k_label + " | " + fmt_complex(r.z) + " | ";
    for (int i = 0; i < 3; ++i) out += fmt(r.angles[i]) + (i < 2 ? "<br>" : "");
    out += " | ";
    for (int i = 0; i < 3; ++i)
      out += fmt(degrees(r.angles[i]), 2) + (i < 2 ? "<br>" : "");
    out += " | " + fmt(r.volume) + " | " + r.classification + " |\n";
  }
  return out;
}

json table_json(Branch b, const std::vector<TableRow>& rows) {
  json doc;
  doc["branch"] = branch_name(b);
  doc["rows"] = json::array();
  for (const auto& r : rows) {
    json j;
    j["k_label"] = r.k_label;
    if (r.k)
      j["k"] = *r.k;
    else
      j["k"] = nullptr;
    j["z_re"] = r.z.real();
    j["z_im"] = r.z.imag();
    j["alpha1"] = r.angles[0];
    j["alpha2"] = r.angles[1];
    j["alpha3"] = r.angles[2];
    j["alpha1_deg"] = degrees(r.angles[0]);
    j["alpha2_deg"] = degrees(r.angles[1]);
    j["alpha3_deg"] = degrees(r.angles[2]);
    j["volume"] = r.volume;
    j["classification"] = r.classification;
    doc["rows"].push_back(j);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// verify

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  int flagged = 0;
  for (const auto& c : report.checks) {
    char line[256];
    const char* tag = c.structural_issue ? "FLAG" : (c.passed ? " OK " : "FAIL");
    std::snprintf(line, sizeof line, "[%s] %-55s deviation %.3e", tag, c.name.c_str(),
                  c.deviation);
    out += line;
    if (!std::isnan(c.deviation_reversed)) {
      std::snprintf(line, sizeof line, "  (reversed %.3e)", c.deviation_reversed);
      out += line;
    }
    if (c.require_nonidentity) out += "  (must stay above tol)";
    if (c.structural_issue)
      out += "\n       word '" + c.word +
             "' has odd orientation-reversal parity; it cannot equal the identity "
             "for any parameter (transcription issue in the recorded relator), "
             "excluded from the verdict";
    out += "\n";
    flagged += c.structural_issue ? 1 : 0;
  }
  char tail[160];
  std::snprintf(tail, sizeof tail,
                "verdict: %s (%zu checks, %d flagged structural) at tol %.1e\n",
                report.all_passed() ? "PASS" : "FAIL", report.checks.size(), flagged,
                report.tol);
  out += tail;
  return out;
}

// ---------------------------------------------------------------------------
// render

Viewport auto_viewport(Complex z) {
  double min_re = 0.0, max_re = 1.0, min_im = 0.0, max_im = 0.0;
  auto include = [&](Complex u) {
    min_re = std::min(min_re, u.real());
    max_re = std::max(max_re, u.real());
    min_im = std::min(min_im, u.imag());
    max_im = std::max(max_im, u.imag());
  };
  include(z);
  if (std::abs(std::abs(z) - 1.0) >= 1e-12) include(fixed_point_v(z));
  const double pad = 0.6 * std::max(max_re - min_re, max_im - min_im) + 0.5;
  return {min_re - pad, min_im - pad, max_re + pad, max_im + pad};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dehn-type surgeries of the Gieseking ideal-simplex manifold:\n"
      "closed-form surgery roots, hyperbolic volumes, holonomy relator\n"
      "verification and cusp tilings."};
  app.require_subcommand(1);

  // ---- solve ----
  auto* cmd_solve =
      app.add_subcommand("solve", "solve one surgery and print the record");
  std::string solve_branch = "gies1", solve_format = "text", solve_out;
  int solve_k = 2;
  cmd_solve->add_option("--branch", solve_branch, "gies1|gies2|gies3|gies4")->required();
  cmd_solve->add_option("--k", solve_k, "rotation order k (integer >= 2)")->required();
  cmd_solve->add_option("--format", solve_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_solve->add_option("--out", solve_out, "write to file instead of stdout");

  // ---- table ----
  auto* cmd_table = app.add_subcommand("table", "tabulate a series over several k");
  std::string table_branch = "gies1", table_format = "md", table_out;
  std::vector<int> table_klist;
  bool table_paper = false, table_check_limit = false;
  cmd_table->add_option("--branch", table_branch, "gies1|gies2|gies3|gies4")->required();
  cmd_table->add_option("--k-list", table_klist, "explicit k values");
  cmd_table->add_flag("--paper", table_paper,
                      "classic row set k = 2,3,4,9,50 plus the limit row, with "
                      "fraction row labels");
  cmd_table->add_flag("--check-limit", table_check_limit,
                      "also evaluate k = 10^4 and print the gap to the limit");
  cmd_table->add_option("--format", table_format, "md|csv|json")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  cmd_table->add_option("--out", table_out, "write to file instead of stdout");

  // ---- verify ----
  auto* cmd_verify =
      app.add_subcommand("verify", "verify all group relations by matrix evaluation");
  std::string verify_branch = "gies1";
  int verify_k = 2;
  double verify_tol = 1e-10, verify_perturb = 0.0;
  cmd_verify->add_option("--branch", verify_branch, "gies1|gies2|gies3|gies4")
      ->required();
  cmd_verify->add_option("--k", verify_k, "rotation order k (integer >= 2)")->required();
  cmd_verify->add_option("--tol", verify_tol, "projective tolerance (default 1e-10)");
  cmd_verify->add_option("--perturb", verify_perturb, "offset added to Re z (test hook)")
      ->group("");  // hidden

  // ---- render ----
  auto* cmd_render = app.add_subcommand("render", "render the cusp tiling as SVG");
  std::string render_branch = "gies1", render_out;
  int render_k = 3, render_depth = 6;
  bool render_manifold = false;
  cmd_render->add_option("--branch", render_branch, "gies1|gies2|gies3|gies4");
  cmd_render->add_option("--k", render_k, "rotation order k (integer >= 2)");
  cmd_render->add_option("--depth", render_depth, "orbit word length, 0..12");
  cmd_render->add_flag("--manifold", render_manifold,
                       "use the cusped-manifold parameter z = 1/2 + i sqrt(3)/2 "
                       "instead of a surgery root");
  cmd_render->add_option("--out", render_out, "output SVG path")->required();

  // ---- limit ----
  auto* cmd_limit = app.add_subcommand("limit", "closed-form k -> infinity limits");
  std::string limit_branch = "gies1", limit_format = "text", limit_out;
  cmd_limit->add_option("--branch", limit_branch, "gies1|gies2|gies3|gies4")->required();
  cmd_limit->add_option("--format", limit_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_limit->add_option("--out", limit_out, "write to file instead of stdout");

  // ---- lobachevsky ----
  auto* cmd_lob =
      app.add_subcommand("lobachevsky", "evaluate the Lobachevsky function");
  double lob_theta = 0.0;
  cmd_lob->add_option("--theta", lob_theta, "argument in radians")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_solve)) {
      const SurgerySolution s = solve(branch_from_string(solve_branch), solve_k);
      if (solve_format == "json")
        emit(solution_to_json(s).dump(2) + "\n", solve_out);
      else
        emit(solution_to_text(s), solve_out);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_table)) {
      const Branch b = branch_from_string(table_branch);
      std::vector<int> ks = table_klist;
      if (table_paper) ks = {2, 3, 4, 9, 50};
      if (ks.empty()) throw std::domain_error("table needs --k-list or --paper");
      std::vector<TableRow> rows;
      for (int k : ks) rows.push_back(row_for(b, k, table_paper));
      if (table_paper) rows.push_back(limit_row(b));

      std::string extra;
      if (table_check_limit) {
        const BranchLimit l = limit(b);
        const SurgerySolution far = solve(b, 10000);
        extra = "limit check at k=10^4: |z - z_limit| = " +
                fmt(std::abs(far.z - l.z_limit)) + ", |volume - volume_limit| = " +
                fmt(std::abs(far.volume - l.volume_limit)) + "\n";
      }

      if (table_format == "csv") {
        std::string out = table_csv(rows);
        if (!extra.empty()) out += "# " + extra;
        emit(out, table_out);
      } else if (table_format == "json") {
        json doc = table_json(b, rows);
        if (table_check_limit) {
          const BranchLimit l = limit(b);
          const SurgerySolution far = solve(b, 10000);
          doc["limit_check"] = {{"k", 10000},
                                {"z_gap", std::abs(far.z - l.z_limit)},
                                {"volume_gap", std::abs(far.volume - l.volume_limit)}};
        }
        emit(doc.dump(2) + "\n", table_out);
      } else {
        std::string out = table_markdown(b, rows);
        if (!extra.empty()) out += "\n_" + extra + "_\n";
        emit(out, table_out);
      }
      return kExitOk;
    }

    if (app.got_subcommand(cmd_verify)) {
      const SurgerySolution s = solve(branch_from_string(verify_branch), verify_k);
      const Complex z = s.z + Complex(verify_perturb, 0.0);
      const VerificationReport report = full_verification(z, verify_k, verify_tol);
      std::cout << "verify " << branch_name(s.branch) << " k=" << verify_k
                << "  z = " << fmt_complex(z) << "\n"
                << report_to_text(report);
      return report.all_passed() ? kExitOk : kExitFailure;
    }

    if (app.got_subcommand(cmd_render)) {
      const Complex z = render_manifold
                            ? Complex(0.5, std::sqrt(3.0) / 2.0)
                            : solve(branch_from_string(render_branch), render_k).z;
      const TileOrbit orbit = orbit_tiles(z, render_depth, auto_viewport(z));
      emit(render_svg(orbit), render_out);
      return kExitOk;
    }

    if (app.got_subcommand(cmd_limit)) {
      const Branch b = branch_from_string(limit_branch);
      const BranchLimit l = limit(b);
      if (limit_format == "json") {
        json j;
        j["branch"] = branch_name(b);
        j["z_re"] = l.z_limit.real();
        j["z_im"] = l.z_limit.imag();
        j["v_infinite"] = l.v_limit.is_infinity();
        if (!l.v_limit.is_infinity()) {
          j["v_re"] = l.v_limit.value().real();
          j["v_im"] = l.v_limit.value().imag();
        }
        j["alpha1"] = l.angle_limits[0];
        j["alpha2"] = l.angle_limits[1];
        j["alpha3"] = l.angle_limits[2];
        j["volume"] = l.volume_limit;
        emit(j.dump(2) + "\n", limit_out);
      } else {
        std::string t;
        t += "branch:  " + branch_name(b) + " (k -> infinity)\n";
        t += "z:       " + fmt_complex(l.z_limit) + "\n";
        t += "v:       " +
             (l.v_limit.is_infinity() ? std::string("infinity")
                                      : fmt_complex(l.v_limit.value())) +
             "\n";
        t += "angles:  " + fmt(l.angle_limits[0]) + ", " + fmt(l.angle_limits[1]) +
             ", " + fmt(l.angle_limits[2]) + "\n";
        t += "volume:  " + fmt(l.volume_limit) + "\n";
        emit(t, limit_out);
      }
      return kExitOk;
    }

    if (app.got_subcommand(cmd_lob)) {
      if (!std::isfinite(lob_theta)) throw std::domain_error("theta must be finite");
      std::cout << fmt(lobachevsky(lob_theta)) << "\n";
      return kExitOk;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
