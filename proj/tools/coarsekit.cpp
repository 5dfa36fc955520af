// Copyright 2026 The coarsekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// coarsekit command-line tool. Every command writes one key-sorted JSON
// document (or a CSV) and exits 0 when all audits pass, 1 on a usage
// error, 2 on a failed audit or precondition, 3 when a size cap is hit.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coarsekit/constructions.hpp"
#include "coarsekit/cover.hpp"
#include "coarsekit/dimension.hpp"
#include "coarsekit/distortion.hpp"
#include "coarsekit/embedding.hpp"
#include "coarsekit/error.hpp"
#include "coarsekit/extension.hpp"
#include "coarsekit/group.hpp"
#include "coarsekit/json_io.hpp"
#include "coarsekit/property_a.hpp"
#include "coarsekit/word_metric.hpp"

namespace ck = coarsekit;
using ck::Json;

namespace {

constexpr double kTol = 1e-9;

// "a..b" (integers, inclusive) or "x,y,z". Must be nonempty and strictly
// increasing.
std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      }
    }
  } catch (const std::logic_error&) {
    throw ck::Error(ck::ErrorCode::kInvalidArgument, "bad schedule", text);
  }
  if (out.empty()) {
    throw ck::Error(ck::ErrorCode::kInvalidArgument, "empty schedule", text);
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i] > out[i - 1])) {
      throw ck::Error(ck::ErrorCode::kInvalidArgument,
                      "schedule must be strictly increasing", text);
    }
  }
  return out;
}

double parse_p(const std::string& text) {
  if (text == "inf") return ck::kInfinity;
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != text.size() || !(p >= 1)) {
    throw ck::Error(ck::ErrorCode::kInvalidArgument, "p must lie in [1, inf]",
                    text);
  }
  return p;
}

// Rank of a zn:<n> token, nullopt for anything else.
std::optional<int> lattice_rank(const ck::GroupSpec& g) {
  if (auto* z = dynamic_cast<const ck::IntegerLattice*>(&g)) return z->rank();
  return std::nullopt;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw ck::Error(ck::ErrorCode::kInvalidArgument, "cannot write file", path);
  }
}

int error_exit(const ck::Error& e) {
  Json doc = {{"error", std::string(ck::to_string(e.code()))},
              {"message", e.what()}};
  if (!e.witness().empty()) doc["witness"] = e.witness();
  std::cout << ck::dump_document(std::move(doc));
  return ck::exit_status(e.code());
}

// Collects named boolean audits; any false makes the command exit 2.
struct Audits {
  Json checks = Json::object();
  bool ok = true;
  void add(const std::string& name, bool pass) {
    checks[name] = pass;
    ok = ok && pass;
  }
  int finish(Json& doc) const {
    doc["audits"] = checks;
    doc["pass"] = ok;
    if (!ok) doc["error"] = "AuditFailed";
    return ok ? 0 : 2;
  }
};

struct Common {
  std::string group = "zn:1";
  int radius = 8;
  std::string out;
  long long cap = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--group", c.group, "group token")->capture_default_str();
  cmd->add_option("--radius", c.radius, "ball radius")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", c.out, "output path (default stdout)");
  cmd->add_option("--ball-cap", c.cap,
                  "element cap, overrides COARSEKIT_BALL_CAP")
      ->check(CLI::PositiveNumber);
}

void apply_cap(const Common& c) {
  if (c.cap > 0) setenv("COARSEKIT_BALL_CAP", std::to_string(c.cap).c_str(), 1);
}

Json lipschitz_block(const ck::Cover& cover, const ck::CoverStats& stats,
                     Audits& audits) {
  const auto la = ck::lipschitz_audit(cover, 20'000'000, stats.multiplicity,
                                      stats.lebesgue_pointwise);
  audits.add("lipschitz", la.pass);
  return ck::to_json(la);
}

// ---- ball -----------------------------------------------------------------

struct BallArgs {
  Common c;
  std::string norms;
  std::size_t matrix_limit = 2000;
};

int cmd_ball(const BallArgs& a) {
  auto win = ck::ball_space(ck::parse_group(a.c.group), a.c.radius);
  if (!a.norms.empty()) {
    std::ostringstream csv;
    win->norm().table(a.c.radius).write_csv(csv);
    write_text(a.norms, csv.str());
  }
  Json doc = {{"command", "ball"},
              {"group", a.c.group},
              {"radius", a.c.radius},
              {"size", win->size()},
              {"space", ck::space_to_json(*win, a.matrix_limit)}};
  write_text(a.c.out, ck::dump_document(std::move(doc)));
  return 0;
}

// ---- cover ----------------------------------------------------------------

struct CoverArgs {
  Common c;
  std::string method = "ball";
  int lambda = 1;
  int r = -1;
  std::string spacing = "standard";
  int kernel_lambda = -1;
  int universe = -1;
  bool allow_boundary = false;
  bool lipschitz = false;
  bool emit_sets = false;
};

Json extension_block(const ck::ExtensionResult& e) {
  return {{"audit_window_size", e.audit_window->size()},
          {"base_multiplicity", e.facts.base_multiplicity},
          {"kernel_multiplicity", e.facts.kernel_multiplicity},
          {"base_lebesgue", ck::json_number(e.facts.base_lebesgue)},
          {"kernel_lebesgue", ck::json_number(e.facts.kernel_lebesgue)},
          {"base_diameter", ck::json_number(e.facts.base_diameter)},
          {"kernel_diameter", ck::json_number(e.facts.kernel_diameter)},
          {"max_anchor_norm", e.max_anchor_norm}};
}

int cmd_cover(const CoverArgs& a) {
  apply_cap(a.c);
  auto group = ck::parse_group(a.c.group);
  Json doc = {{"command", "cover"},
              {"method", a.method},
              {"group", a.c.group},
              {"radius", a.c.radius},
              {"lambda", a.lambda}};
  Audits audits;
  const double lam = a.lambda;

  auto finish = [&](const ck::Cover& cover, const ck::CoverStats& stats) {
    doc["stats"] = ck::to_json(stats);
    if (a.lipschitz) doc["lipschitz"] = lipschitz_block(cover, stats, audits);
    if (a.emit_sets) doc["cover"] = ck::to_json(cover);
    const int code = audits.finish(doc);
    write_text(a.c.out, ck::dump_document(std::move(doc)));
    return code;
  };

  try {
    if (a.method == "ball" || a.method == "brick" || a.method == "families") {
      auto win = ck::ball_space(group, a.c.radius);
      std::optional<ck::Cover> cover;
      std::optional<double> envelope;
      if (a.method == "ball") {
        cover.emplace(ck::ball_cover(win, lam));
        envelope = static_cast<double>(
            ck::word_norm_table(group, a.lambda).size());
      } else if (a.method == "brick") {
        auto l = lattice_rank(*group);
        if (!l) {
          throw ck::Error(ck::ErrorCode::kInvalidArgument,
                          "brick covers need a zn:<n> group", a.c.group);
        }
        ck::BrickSpacing spacing;
        if (a.spacing == "standard") {
          spacing = ck::BrickSpacing::kStandard;
          envelope = *l + 1;
        } else if (a.spacing == "tight") {
          spacing = ck::BrickSpacing::kTight;
        } else {
          throw ck::Error(ck::ErrorCode::kInvalidArgument, "unknown spacing",
                          a.spacing);
        }
        doc["spacing"] = a.spacing;
        cover.emplace(ck::brick_cover_zl(win, *l, a.lambda, spacing));
      } else {
        const int r = a.r >= 0 ? a.r : 2 * a.lambda + 1;
        auto fams = ck::brick_families(*win, r);
        cover.emplace(ck::families_to_cover(win, fams, r, lam));
        envelope = static_cast<double>(fams.size());
        doc["r"] = r;
        doc["families"] = fams.size();
      }
      const auto stats = ck::cover_stats(*cover, lam);
      doc["safe_margin"] = a.lambda;
      if (envelope) {
        doc["envelope"] = ck::json_number(*envelope);
        audits.add("multiplicity_envelope",
                   static_cast<double>(stats.multiplicity) <= *envelope);
      }
      std::string witness;
      audits.add("lebesgue", ck::lebesgue_at_least(*cover, lam, lam, &witness));
      if (!witness.empty()) doc["lebesgue_witness"] = witness;
      return finish(*cover, stats);
    }
    if (a.method == "extension") {
      auto res = ck::plane_extension_cover(a.c.radius, a.lambda,
                                           a.kernel_lambda, a.universe);
      const auto& p = res.parameters;
      const auto& e = res.extension;
      doc["group"] = "zn:2";
      doc["projection"] = "zn:2 -> zn:1";
      doc["parameters"] = {{"R", ck::json_number(p.R)},
                           {"D", ck::json_number(p.D)},
                           {"universe_radius", p.universe_radius},
                           {"kernel_lambda", p.kernel_lambda}};
      doc["extension"] = extension_block(e);
      audits.add("lebesgue", e.stats.lebesgue_pointwise >= lam - kTol);
      audits.add("diameter", e.stats.diameter <= p.D + 2 * p.R + kTol);
      audits.add("multiplicity", e.stats.multiplicity <=
                                     e.facts.base_multiplicity *
                                         e.facts.kernel_multiplicity);
      return finish(e.cover, e.stats);
    }
    if (a.method == "wreath") {
      auto res = ck::wreath_cover(group, a.c.radius, a.lambda);
      const auto& p = res.parameters;
      const auto& e = res.extension;
      doc["parameters"] = {{"R", ck::json_number(p.R)},
                           {"r", p.r},
                           {"D", ck::json_number(p.D)},
                           {"universe_radius", p.universe_radius},
                           {"base_asdim", p.base_asdim},
                           {"lamp_asdim", p.lamp_asdim},
                           {"ball_r_size", p.ball_r_size}};
      doc["envelope"] = p.theoretical_bound;
      doc["extension"] = extension_block(e);
      audits.add("multiplicity_envelope",
                 e.stats.multiplicity <= p.theoretical_bound);
      audits.add("lebesgue", e.stats.lebesgue_pointwise >= lam - kTol);
      return finish(e.cover, e.stats);
    }
    if (a.method == "heisenberg") {
      auto res = ck::heisenberg_cover(a.c.radius, a.lambda);
      const auto& p = res.parameters;
      const auto& e = res.extension;
      doc["group"] = "heisenberg";
      doc["parameters"] = {{"R", ck::json_number(p.R)},
                           {"D", ck::json_number(p.D)},
                           {"universe_radius", p.universe_radius},
                           {"center_lambda", p.center_lambda}};
      doc["extension"] = extension_block(e);
      audits.add("lebesgue", e.stats.lebesgue_pointwise >= lam - kTol);
      audits.add("diameter", e.stats.diameter <= p.D + 2 * p.R + kTol);
      return finish(e.cover, e.stats);
    }
  } catch (const ck::Error& e) {
    if (a.allow_boundary && e.code() == ck::ErrorCode::kWindowTooSmall) {
      doc["warning"] = {{"error", std::string(ck::to_string(e.code()))},
                        {"message", e.what()},
                        {"witness", e.witness()}};
      write_text(a.c.out, ck::dump_document(std::move(doc)));
      return 0;
    }
    throw;
  }
  throw ck::Error(ck::ErrorCode::kInvalidArgument, "unknown cover method",
                  a.method);
}

// ---- certify-a ------------------------------------------------------------

struct CertifyArgs {
  Common c;
  std::string p = "2";
  std::string n = "2..8";
  std::string K = "1,2,4";
  std::string family;
  std::string cover_method;
  double convert_to = 0;
};

ck::PropertyAFamily build_family(ck::GroupPtr group,
                                 std::shared_ptr<const ck::WordMetricWindow> win,
                                 const std::vector<double>& levels, double p,
                                 const std::string& family,
                                 const std::string& cover_method) {
  if (family == "tent") return ck::tent_family(win, levels, p);
  if (family != "covers") {
    throw ck::Error(ck::ErrorCode::kInvalidArgument, "unknown family", family);
  }
  if (std::isinf(p)) {
    throw ck::Error(ck::ErrorCode::kInvalidArgument,
                    "cover families need a finite p");
  }
  const auto rank = lattice_rank(*group);
  std::string method = cover_method;
  if (method.empty()) method = rank && *rank == 1 ? "brick" : "ball";
  std::vector<std::pair<double, ck::Cover>> covers;
  for (double n : levels) {
    const int lam = static_cast<int>(std::ceil(n - kTol)) + 1;
    if (method == "ball") {
      covers.emplace_back(n, ck::ball_cover(win, lam));
    } else if (method == "brick") {
      if (!rank) {
        throw ck::Error(ck::ErrorCode::kInvalidArgument,
                        "brick covers need a zn:<n> group", group->token());
      }
      covers.emplace_back(n, ck::brick_cover_zl(win, *rank, lam));
    } else {
      throw ck::Error(ck::ErrorCode::kInvalidArgument, "unknown cover method",
                      method);
    }
  }
  return ck::family_from_covers(covers, p);
}

int cmd_certify(const CertifyArgs& a) {
  apply_cap(a.c);
  const double p = parse_p(a.p);
  const auto levels = parse_schedule(a.n);
  const auto Ks = parse_schedule(a.K);
  auto group = ck::parse_group(a.c.group);
  auto win = ck::ball_space(group, a.c.radius);
  const std::string family =
      a.family.empty() ? (std::isinf(p) ? "tent" : "covers") : a.family;
  auto fam = build_family(group, win, levels, p, family, a.cover_method);
  ck::validate_family(fam);

  Json doc = {{"command", "certify-a"},
              {"group", a.c.group},
              {"radius", a.c.radius},
              {"p", ck::json_number(p)},
              {"family", family}};
  Json radii = Json::object();
  Json mult = Json::object();
  for (std::size_t i = 0; i < fam.levels.size(); ++i) {
    radii[ck::format_number(fam.levels[i])] =
        ck::json_number(fam.support_radius[i]);
    mult[ck::format_number(fam.levels[i])] = fam.multiplicity[i];
  }
  doc["support_radius"] = std::move(radii);
  doc["multiplicity"] = std::move(mult);
  Audits audits;
  const auto report = ck::variation_report(fam, Ks);
  doc["variation"] = ck::to_json(report);
  audits.add("variation_bound", report.within_bounds);
  audits.add("monotone", report.monotone);

  if (a.convert_to > 0) {
    const double m = a.convert_to;
    const double maxK = Ks.back();
    std::optional<ck::ConvertedFamily> conv;
    if (std::isinf(p)) {
      throw ck::Error(ck::ErrorCode::kInvalidArgument,
                      "conversion needs a finite p");
    } else if (m >= p) {
      conv.emplace(ck::convert_up(fam, m, maxK));
    } else if (m == 1) {
      conv.emplace(ck::convert_down_to_1(fam, maxK));
    } else {
      throw ck::Error(ck::ErrorCode::kInvalidArgument,
                      "convert to m >= p or to 1");
    }
    const auto creport = ck::variation_report(conv->family, Ks);
    doc["conversion"] = {{"to", ck::json_number(m)},
                         {"audit", ck::to_json(conv->audit)},
                         {"variation", ck::to_json(creport)}};
    audits.add("conversion_inequality", conv->audit.min_slack >= -kTol);
    audits.add("conversion_bound", creport.within_bounds);
  }
  const int code = audits.finish(doc);
  write_text(a.c.out, ck::dump_document(std::move(doc)));
  return code;
}

// ---- embed ----------------------------------------------------------------

struct EmbedArgs {
  Common c;
  std::string p = "2";
  std::string n;
  std::size_t slots = 5;
};

int cmd_embed(const EmbedArgs& a) {
  apply_cap(a.c);
  const double p = parse_p(a.p);
  auto win = ck::ball_space(ck::parse_group(a.c.group), a.c.radius);
  const auto levels = parse_schedule(
      a.n.empty() ? "1.." + std::to_string(std::max(a.c.radius, 1)) : a.n);
  auto fam = ck::tent_family(win, levels, p);
  const ck::PointId base = *win->find(win->group().unit());
  const auto res = ck::coarse_embedding(fam, base, a.slots);
  Json doc = {{"command", "embed"},
              {"group", a.c.group},
              {"radius", a.c.radius},
              {"p", ck::json_number(p)},
              {"slots", a.slots},
              {"embedding", ck::to_json(res)}};
  Audits audits;
  audits.add("rho_bounds", res.pass);
  audits.add("base_image_zero", res.images.at(base).support_size() == 0);
  const int code = audits.finish(doc);
  write_text(a.c.out, ck::dump_document(std::move(doc)));
  return code;
}

// ---- profile / gromov -----------------------------------------------------

struct ProfileArgs {
  Common c;
  std::string lambda;
  std::string policy;
};

int cmd_profile(const ProfileArgs& a) {
  apply_cap(a.c);
  const auto lambdas = parse_schedule(a.lambda);
  const auto policy = ck::DPolicy::parse(a.policy);
  const auto prof = ck::growth_curve(ck::parse_group(a.c.group), lambdas,
                                     policy, a.c.radius);
  std::ostringstream csv;
  ck::write_profile_csv(csv, prof);
  write_text(a.c.out, csv.str());
  for (const auto& note : prof.notes) std::cerr << "note: " << note << "\n";
  return 0;
}

struct GromovArgs {
  Common c;
  std::size_t mcap = 2;
  std::string lambda = "0,1,2,4,8";
};

int cmd_gromov(const GromovArgs& a) {
  apply_cap(a.c);
  const auto rows = ck::gromov_profile(ck::parse_group(a.c.group), a.mcap,
                                       parse_schedule(a.lambda));
  std::ostringstream csv;
  ck::write_gromov_csv(csv, rows);
  write_text(a.c.out, csv.str());
  return 0;
}

// ---- distortion -----------------------------------------------------------

int cmd_distortion(const Common& c) {
  apply_cap(c);
  if (c.group != "heisenberg") {
    throw ck::Error(ck::ErrorCode::kInvalidArgument,
                    "distortion is measured for the heisenberg center only",
                    c.group);
  }
  auto h = ck::parse_group("heisenberg");
  const auto pairs = ck::distortion_profile(
      h, [](const ck::Element& e) { return e[0] == 0 && e[1] == 0; },
      {{0, 0, 1}}, c.radius);
  std::vector<std::pair<double, double>> xy;
  Json rows = Json::array();
  for (const auto& p : pairs) {
    xy.emplace_back(p.inner, p.ambient);
    rows.push_back({{"element", h->format(p.element)},
                    {"inner", p.inner},
                    {"ambient", p.ambient}});
  }
  Json doc = {{"command", "distortion"},
              {"group", c.group},
              {"subgroup", "center"},
              {"radius", c.radius},
              {"pairs", std::move(rows)},
              {"slope", ck::json_number(ck::fit_loglog_slope(xy))}};
  write_text(c.out, ck::dump_document(std::move(doc)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarsekit: covers, property A and dimension growth at desk scale"};
  app.require_subcommand(1);

  BallArgs ball;
  auto* sub_ball = app.add_subcommand("ball", "word-metric ball as a space file");
  add_common(sub_ball, ball.c);
  sub_ball->add_option("--norms", ball.norms, "norm table CSV path");
  sub_ball->add_option("--matrix-limit", ball.matrix_limit,
                       "largest space written with its full matrix")
      ->capture_default_str();

  CoverArgs cover;
  auto* sub_cover = app.add_subcommand("cover", "build and audit a cover");
  add_common(sub_cover, cover.c);
  sub_cover->add_option("--method", cover.method)
      ->check(CLI::IsMember(
          {"ball", "brick", "families", "extension", "wreath", "heisenberg"}))
      ->capture_default_str();
  sub_cover->add_option("--lambda", cover.lambda)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub_cover->add_option("--r", cover.r, "disjointness for --method families");
  sub_cover->add_option("--spacing", cover.spacing, "standard | tight")
      ->capture_default_str();
  sub_cover->add_option("--kernel-lambda", cover.kernel_lambda,
                        "Lebesgue number of the kernel cover (extension)");
  sub_cover->add_option("--universe", cover.universe,
                        "universe ball radius (extension)");
  sub_cover->add_flag("--allow-boundary", cover.allow_boundary,
                      "report truncation failures as warnings");
  sub_cover->add_flag("--lipschitz", cover.lipschitz,
                      "audit the partition of unity");
  sub_cover->add_flag("--emit-sets", cover.emit_sets, "include the sets");

  CertifyArgs cert;
  auto* sub_cert = app.add_subcommand("certify-a", "property A certificate");
  add_common(sub_cert, cert.c);
  sub_cert->add_option("--p", cert.p, "1..inf")->capture_default_str();
  sub_cert->add_option("--n", cert.n, "levels, a..b or a,b,c")
      ->capture_default_str();
  sub_cert->add_option("--K", cert.K, "distances")->capture_default_str();
  sub_cert->add_option("--family", cert.family, "covers | tent");
  sub_cert->add_option("--cover-method", cert.cover_method, "ball | brick");
  sub_cert->add_option("--convert-to", cert.convert_to, "target exponent");

  EmbedArgs emb;
  auto* sub_embed = app.add_subcommand("embed", "coarse embedding audit");
  add_common(sub_embed, emb.c);
  sub_embed->add_option("--p", emb.p)->capture_default_str();
  sub_embed->add_option("--n", emb.n, "levels (default 1..radius)");
  sub_embed->add_option("--slots", emb.slots)->capture_default_str();

  ProfileArgs prof;
  auto* sub_prof = app.add_subcommand("profile", "dimension growth curve CSV");
  add_common(sub_prof, prof.c);
  sub_prof->add_option("--lambda", prof.lambda, "lambda schedule")->required();
  sub_prof->add_option("--policy", prof.policy, "linear:c | poly:c0,c1,...")
      ->required();

  GromovArgs gro;
  auto* sub_gro = app.add_subcommand("gromov", "diameter under a multiplicity cap");
  add_common(sub_gro, gro.c);
  sub_gro->add_option("--cap", gro.mcap, "multiplicity cap")
      ->capture_default_str();
  sub_gro->add_option("--lambda", gro.lambda)->capture_default_str();

  Common dist;
  dist.group = "heisenberg";
  dist.radius = 14;
  auto* sub_dist = app.add_subcommand("distortion", "center distortion");
  add_common(sub_dist, dist);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sub_ball) {
      apply_cap(ball.c);
      return cmd_ball(ball);
    }
    if (*sub_cover) return cmd_cover(cover);
    if (*sub_cert) return cmd_certify(cert);
    if (*sub_embed) return cmd_embed(emb);
    if (*sub_prof) return cmd_profile(prof);
    if (*sub_gro) return cmd_gromov(gro);
    if (*sub_dist) return cmd_distortion(dist);
  } catch (const ck::Error& e) {
    if (e.code() == ck::ErrorCode::kInvalidArgument) {
      std::cout << ck::dump_document(
          {{"error", "InvalidArgument"}, {"message", e.what()},
           {"witness", e.witness()}});
      return 1;
    }
    return error_exit(e);
  }
  return 1;
}
