// grig: command-line front end for the Grigorchuk group engine.
//
// Exit status: 0 success, 1 refutation or rejected claim (documented per
// subcommand), 2 usage error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grig/branch.hpp"
#include "grig/certificate.hpp"
#include "grig/config.hpp"
#include "grig/decision.hpp"
#include "grig/engel.hpp"
#include "grig/tree.hpp"
#include "grig/word.hpp"

using nlohmann::json;
using namespace grig;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2, kCap = 3 };

struct Options {
  Config config;
  bool json_out = false;
  std::string out_file;
};

json stamped(json j) {
  j["schema"] = kCertificateSchema;
  return j;
}

void emit(const Options &opt, const json &j, const std::string &text) {
  if (opt.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
  if (!opt.out_file.empty()) {
    std::ofstream f(opt.out_file);
    if (!f)
      throw std::runtime_error("cannot write " + opt.out_file);
    f << j.dump(2) << '\n';
  }
}

json decomposition_json(const Decomposition &d) {
  return {{"active", d.active}, {"left", d.left.str()}, {"right", d.right.str()}};
}

json check_json(const CoordinateCheck &c) {
  return stamped({{"holds", c.holds},
                  {"lhs", decomposition_json(c.lhs)},
                  {"rhs", {{"left", c.rhs_left.str()}, {"right", c.rhs_right.str()}}}});
}

std::string survey_text(const SurveyReport &r) {
  std::ostringstream s;
  s << "samples " << r.samples << ", bound " << r.bound << ": " << r.sinks << " sinks, " << r.no_sink
    << " without sink, " << r.overflow << " overflows, " << r.excluded << " excluded";
  for (const SurveyEntry &e : r.flagged)
    s << "\nflagged: g = " << e.g.str() << ", x = " << e.x.str()
      << (e.overflow ? " (tower length cap)" : " (no sink up to bound)");
  return s.str();
}

json survey_json(const SurveyReport &r) {
  json flagged = json::array();
  for (const SurveyEntry &e : r.flagged)
    flagged.push_back({{"g", e.g.str()}, {"x", e.x.str()}, {"overflow", e.overflow}});
  return stamped({{"samples", r.samples},
                  {"bound", r.bound},
                  {"sinks", r.sinks},
                  {"no_sink", r.no_sink},
                  {"overflow", r.overflow},
                  {"excluded", r.excluded},
                  {"depth_histogram", r.depth_histogram},
                  {"flagged", flagged}});
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computation in the first Grigorchuk group"};
  app.require_subcommand(1);
  Options opt;
  Config &cfg = opt.config;
  unsigned bound = 0;

  app.add_flag("--json", opt.json_out, "JSON output");
  app.add_option("--max-depth", cfg.max_depth, "depth for witness-vertex searches")->capture_default_str();
  app.add_option("--order-cap", cfg.order_cap, "largest exponent k tried by order")->capture_default_str();
  app.add_option("--level-cap", cfg.level_cap, "depth cap for first-active")->capture_default_str();
  app.add_option("--tower-cap", cfg.tower_cap, "length cap for commutator towers")->capture_default_str();
  app.add_option("--budget", cfg.budget, "candidate budget for searches")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("-N,--bound", bound, "bound N");
  app.add_option("--out", opt.out_file, "also write the JSON result to this file");
  app.fallthrough();

  std::string w1, w2, vertex_lit, t1, t2, file;
  unsigned level = 1, m = 1;
  std::uint64_t samples = 0;
  unsigned opponents = 1;
  bool second = false, search = false;

  auto *reduce = app.add_subcommand("reduce", "reduce a word");
  reduce->add_option("word", w1)->required();
  auto *eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("first", w1)->required();
  eq->add_option("second", w2)->required();
  auto *ord = app.add_subcommand("order", "order of an element");
  ord->add_option("word", w1)->required();
  auto *act_cmd = app.add_subcommand("act", "image of a vertex");
  act_cmd->add_option("word", w1)->required();
  act_cmd->add_option("vertex", vertex_lit)->required();
  auto *sections = app.add_subcommand("sections", "level permutation and sections at a level");
  sections->add_option("word", w1)->required();
  sections->add_option("--level", level)->capture_default_str();
  auto *stab = app.add_subcommand("stab", "level stabilizer membership");
  stab->add_option("word", w1)->required();
  stab->add_option("--level", level)->capture_default_str();
  auto *first_active = app.add_subcommand("first-active", "first level moved by an element");
  first_active->add_option("word", w1)->required();
  auto *k_test = app.add_subcommand("k-test", "membership in the branching subgroup K");
  k_test->add_option("word", w1)->required();
  auto *k_embed = app.add_subcommand("k-embed", "element of K with prescribed first-level sections");
  k_embed->add_option("--k1", t1, "TWord for the left section");
  k_embed->add_option("--k2", t2, "TWord for the right section");
  auto *lift = app.add_subcommand("lift", "stabilizer element with a prescribed section");
  lift->add_option("word", w1)->required();
  lift->add_flag("--second", second, "prescribe the right section instead of the left");
  auto *quotient = app.add_subcommand("quotient", "finite level quotient and index of K's image");
  quotient->add_option("--level", level)->capture_default_str();
  auto *probe = app.add_subcommand("engel-probe", "left Engel tower [x,_n g] up to N; exit 1 if no sink");
  probe->add_option("--g", w1)->required();
  probe->add_option("--x", w2);
  probe->add_flag("--search", search, "search for an x without a sink up to N");
  auto *lemma1 = app.add_subcommand("lemma1", "check the [y,_m a*g] formula for y = emb_pair(k, 1)");
  lemma1->add_option("--k", t1)->required();
  lemma1->add_option("--g", w1)->required();
  lemma1->add_option("--m", m)->required();
  auto *lemma2 = app.add_subcommand("lemma2", "check the [x,_(m+1) y] section formula");
  lemma2->add_option("--x", w1)->required();
  lemma2->add_option("--y", w2)->required();
  lemma2->add_option("--m", m)->required();
  auto *replay_left = app.add_subcommand("replay-left", "bounded-left refutation certificate");
  replay_left->add_option("--x", w1)->required();
  auto *replay_right_cmd = app.add_subcommand("replay-right", "right Engel refutation certificate");
  replay_right_cmd->add_option("--x", w1)->required();
  auto *search_pair = app.add_subcommand("search-pair", "pair in K with a long nonvanishing tower");
  auto *survey = app.add_subcommand("survey", "sink depths of random involutions");
  survey->add_option("--samples", samples)->required();
  survey->add_option("--opponents", opponents)->capture_default_str();
  survey->add_option("--g", w1, "fixed g instead of random involutions");
  auto *verify = app.add_subcommand("verify", "re-check a certificate file; exit 1 if rejected");
  verify->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  auto need_bound = [&] {
    if (bound == 0)
      throw PreconditionViolated("this subcommand needs -N/--bound >= 1");
  };

  try {
    if (reduce->parsed()) {
      Word r = Word::parse(w1);
      emit(opt, stamped({{"input", w1}, {"reduced", r.str()}}), r.str());
    } else if (eq->parsed()) {
      bool e = are_equal(Word::parse(w1), Word::parse(w2));
      emit(opt, stamped({{"g", w1}, {"h", w2}, {"equal", e}}), e ? "true" : "false");
    } else if (ord->parsed()) {
      OrderResult r = order(Word::parse(w1), cfg.order_cap);
      json j = stamped({{"word", Word::parse(w1).str()}, {"exact", r.exact}, {"exponent", r.exponent}});
      j["order"] = r.exact ? json(r.value()) : json(nullptr);
      emit(opt, j, r.str());
      if (!r.exact)
        return kCap;
    } else if (act_cmd->parsed()) {
      Vertex v = act(Word::parse(w1), Vertex::parse(vertex_lit));
      emit(opt, stamped({{"word", w1}, {"vertex", vertex_lit}, {"image", v.path()}}), v.path());
    } else if (sections->parsed()) {
      if (level > 20)
        throw ResourceCap("sections are listed for levels up to 20");
      LevelSections s = sections_at(Word::parse(w1), level);
      json secs = json::array();
      std::ostringstream text;
      for (std::size_t i = 0; i < s.sections.size(); ++i) {
        secs.push_back(s.sections[i].str());
        text << (i ? "\n" : "") << Vertex::from_index(i, level).path() << " -> "
             << Vertex::from_index(s.perm.images[i], level).path() << "  " << s.sections[i].str();
      }
      emit(opt, stamped({{"word", w1}, {"level", level}, {"perm", s.perm.images}, {"sections", secs}}),
           text.str());
    } else if (stab->parsed()) {
      bool in = in_level_stabilizer(Word::parse(w1), level);
      emit(opt, stamped({{"word", w1}, {"level", level}, {"in_stabilizer", in}}), in ? "true" : "false");
    } else if (first_active->parsed()) {
      auto l = first_active_level(Word::parse(w1), cfg.level_cap);
      emit(opt, stamped({{"word", w1}, {"level", l ? json(*l) : json(nullptr)}}),
           l ? std::to_string(*l) : "none");
    } else if (k_test->parsed()) {
      Word g = Word::parse(w1);
      KMembershipResult r = membership_in_K(g);
      emit(opt, k_membership_certificate(g, r), to_string(r.verdict));
    } else if (k_embed->parsed()) {
      Word y = emb_pair(TWord::parse(t1), TWord::parse(t2));
      emit(opt, stamped({{"k1", t1}, {"k2", t2}, {"y", y.str()}}), y.str());
    } else if (lift->parsed()) {
      Word g = Word::parse(w1);
      Word s = second ? lift_second(g) : lift_first(g);
      emit(opt, stamped({{"word", w1}, {"side", second ? "second" : "first"}, {"lift", s.str()}}), s.str());
    } else if (quotient->parsed()) {
      const LevelQuotient &q = level_quotient(level);
      json j = stamped({{"level", level},
                        {"group_order", q.group_order().str()},
                        {"k_image_order", q.k_image_order().str()},
                        {"k_image_index", q.k_image_index()},
                        {"base_length", q.group_chain().base().size()}});
      emit(opt, j,
           "level " + std::to_string(level) + ": |G| = " + q.group_order().str() +
               ", [G : image of K] = " + std::to_string(q.k_image_index()));
    } else if (probe->parsed()) {
      need_bound();
      Word g = Word::parse(w1);
      if (search) {
        auto w = search_left_witness(g, bound, cfg.budget, cfg.seed, cfg.walk_length, cfg.tower_cap);
        if (!w) {
          emit(opt, stamped({{"g", w1}, {"bound", bound}, {"found", false}}),
               "no witness found within budget");
          return kOk;
        }
        emit(opt, to_certificate(*w), "no sink up to " + std::to_string(bound) + " for x = " + w->x.str());
        return kRefuted;
      }
      if (w2.empty())
        throw PreconditionViolated("engel-probe needs --x or --search");
      ProbeResult r = left_engel_probe(g, Word::parse(w2), bound, cfg.tower_cap);
      if (auto *sink = std::get_if<EngelSink>(&r)) {
        emit(opt, to_certificate(*sink), "sink at n = " + std::to_string(sink->n));
        return kOk;
      }
      const auto &ns = std::get<NoSinkUpTo>(r);
      emit(opt, to_certificate(ns),
           "no sink up to " + std::to_string(bound) + "; witness vertex " + ns.witness.path());
      return kRefuted;
    } else if (lemma1->parsed()) {
      CoordinateCheck c = lemma1_evaluate(TWord::parse(t1), Word::parse(w1), m);
      emit(opt, check_json(c), c.holds ? "true" : "false");
      return c.holds ? kOk : kRefuted;
    } else if (lemma2->parsed()) {
      CoordinateCheck c = lemma2_evaluate(Word::parse(w1), Word::parse(w2), m);
      emit(opt, check_json(c), c.holds ? "true" : "false");
      return c.holds ? kOk : kRefuted;
    } else if (replay_left->parsed()) {
      need_bound();
      BoundedLeftRefutation r = replay_bounded_left(Word::parse(w1), bound, cfg.budget, cfg.seed);
      opt.json_out = true;
      emit(opt, to_certificate(r), "");
    } else if (replay_right_cmd->parsed()) {
      need_bound();
      RightRefutation r = replay_right(Word::parse(w1), bound, cfg.budget, cfg.seed);
      opt.json_out = true;
      emit(opt, to_certificate(r), "");
    } else if (search_pair->parsed()) {
      need_bound();
      auto p = search_nonengel_pair(bound, cfg.budget, cfg.seed, cfg.tower_cap);
      if (!p)
        throw SearchExhausted("no pair found within budget");
      emit(opt, stamped({{"bound", bound}, {"h", p->h.str()}, {"y1", p->y1.str()}}),
           "h = " + p->h.str() + "\ny1 = " + p->y1.str());
    } else if (survey->parsed()) {
      need_bound();
      std::optional<Word> g;
      if (!w1.empty())
        g = Word::parse(w1);
      SurveyReport r = involution_survey(samples, bound, cfg.seed, opponents, g, cfg.tower_cap);
      emit(opt, survey_json(r), survey_text(r));
    } else if (verify->parsed()) {
      std::ifstream f(file);
      if (!f)
        throw PreconditionViolated("cannot read certificate file " + file);
      json c = json::parse(f, nullptr, false);
      VerifyReport rep = c.is_discarded() ? VerifyReport{} : verify_certificate(c);
      if (c.is_discarded())
        rep.check(false, "file is valid JSON");
      emit(opt, stamped({{"kind", rep.kind}, {"ok", rep.ok}, {"passed", rep.passed}, {"failed", rep.failed}}),
           std::string(rep.ok ? "accepted" : "rejected") + " (" + rep.kind + ", " +
               std::to_string(rep.passed.size()) + " checks passed, " +
               std::to_string(rep.failed.size()) + " failed)");
      return rep.ok ? kOk : kRefuted;
    }
  } catch (const ParseError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolated &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded &e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const TowerBlowup &e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const ResourceCap &e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const SearchExhausted &e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  }
  return kOk;
}
