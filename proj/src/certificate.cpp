#include "grig/certificate.hpp"

#include <exception>

namespace grig {

using nlohmann::json;

namespace {

json envelope(const char *kind) {
  return json{{"schema", kCertificateSchema}, {"engine_version", kEngineVersion}, {"kind", kind}};
}

json lengths_json(const std::vector<std::size_t> &lengths) { return json(lengths); }

json reduction_json(const ActiveReduction &r) {
  return json{{"level", r.level}, {"vertex", r.vertex.path()}, {"section", r.section.str()}};
}

Word word_at(const json &j, const char *key) { return Word::parse(j.at(key).get<std::string>()); }
TWord tword_at(const json &j, const char *key) { return TWord::parse(j.at(key).get<std::string>()); }
Vertex vertex_of(const json &j) { return Vertex::parse(j.get<std::string>()); }

std::vector<std::size_t> tower_lengths(const std::vector<Word> &tower) {
  std::vector<std::size_t> out;
  for (const Word &w : tower)
    out.push_back(w.size());
  return out;
}

constexpr unsigned kMaxReductionLevel = 24;

bool moves(const Word &g, const Vertex &v) { return !(act(g, v) == v); }

// Checks the reduction x in St(level) with an odd-activity section at vertex.
ActiveReduction check_reduction(VerifyReport &rep, const Word &x, const json &j) {
  ActiveReduction r{j.at("level").get<unsigned>(), Vertex::parse(j.at("vertex").get<std::string>()),
                    word_at(j, "section")};
  rep.check(r.vertex.depth() == r.level, "reduction vertex lies on the reduction level");
  if (r.level > kMaxReductionLevel)
    throw std::out_of_range("reduction level " + std::to_string(r.level) + " is implausibly deep");
  rep.check(in_level_stabilizer(x, r.level), "x fixes every vertex of the reduction level");
  if (r.vertex.depth() == r.level) {
    LevelSections s = sections_at(x, r.level);
    rep.check(are_equal(s.sections[r.vertex.index()], r.section),
              "recorded section equals the section of x at the reduction vertex");
  }
  rep.check(r.section.root_activity() == 1, "reduced section has odd root activity");
  return r;
}

void verify_sink(VerifyReport &rep, const json &c) {
  const Word g = word_at(c.at("inputs"), "g"), x = word_at(c.at("inputs"), "x");
  const unsigned n = c.at("bound").get<unsigned>();
  rep.check(n >= 1, "sink depth is at least 1");
  if (n < 1)
    return;
  std::vector<Word> tower = commutator_tower(x, g, n);
  rep.check(is_trivial(tower.back()), "[x,_n g] is trivial");
  if (n >= 2)
    rep.check(!is_trivial(tower[n - 2]), "[x,_(n-1) g] is nontrivial");
  rep.check(c.at("transcript").at("lengths") == lengths_json(tower_lengths(tower)),
            "tower lengths match the transcript");
}

void verify_nonengel(VerifyReport &rep, const json &c) {
  const Word g = word_at(c.at("inputs"), "g"), x = word_at(c.at("inputs"), "x");
  const unsigned n = c.at("bound").get<unsigned>();
  rep.check(n >= 1, "bound is at least 1");
  if (n < 1)
    return;
  std::vector<Word> tower = commutator_tower(x, g, n);
  const Vertex v = vertex_of(c.at("witnesses").at(0));
  rep.check(moves(tower.back(), v), "[x,_N g] moves the witness vertex");
  rep.check(c.at("transcript").at("lengths") == lengths_json(tower_lengths(tower)),
            "tower lengths match the transcript");
}

void verify_bounded_left(VerifyReport &rep, const json &c) {
  const json &in = c.at("inputs");
  const json &tr = c.at("transcript");
  const Word x = word_at(in, "x");
  const TWord k = tword_at(in, "k");
  const unsigned n = c.at("bound").get<unsigned>();
  rep.check(n >= 1, "bound is at least 1");
  if (n < 1)
    return;

  rep.check(!is_trivial(x) && is_trivial(x * x), "x is an involution");
  ActiveReduction red = check_reduction(rep, x, tr.at("reduction"));

  const Word kk = flatten(k);
  const unsigned e = tr.at("k_order_exponent").get<unsigned>();
  Word half = kk;
  for (unsigned i = 1; i < e; ++i)
    half = half * half;
  rep.check(e >= 1 && !is_trivial(half) && is_trivial(half * half), "order of k is 2^e");
  rep.check(e >= n, "order of k exceeds 2^(N-1)");

  const Word y = word_at(tr, "y");
  rep.check(y == emb_pair(k, TWord()), "y is emb_pair(k, 1)");
  Decomposition d = decompose(y);
  rep.check(d.active == 0 && are_equal(d.left, kk) && is_trivial(d.right),
            "psi(y) = (k, 1)");

  std::vector<Word> tower = commutator_tower(y, red.section, n);
  rep.check(tr.at("lengths") == lengths_json(tower_lengths(tower)), "tower lengths match the transcript");
  const Vertex v = vertex_of(c.at("witnesses").at(0));
  rep.check(moves(tower.back(), v), "[y,_N x_active] moves the witness vertex");
  if (is_trivial(red.section * red.section))
    rep.check(lemma1_check(k, Word::from_reduced("a") * red.section, n),
              "commutator formula for [y,_N x_active] holds");
}

void verify_right(VerifyReport &rep, const json &c) {
  const json &in = c.at("inputs");
  const json &tr = c.at("transcript");
  const Word x = word_at(in, "x");
  const TWord h = tword_at(in, "h"), y1 = tword_at(in, "y1");
  const unsigned n = c.at("bound").get<unsigned>();
  rep.check(n >= 1, "bound is at least 1");
  if (n < 1)
    return;

  rep.check(!is_trivial(x), "x is nontrivial");
  ActiveReduction red = check_reduction(rep, x, tr.at("reduction"));

  const Word g1 = word_at(tr, "g1");
  rep.check(are_equal(decompose(Word::from_reduced("a") * red.section).left, g1),
            "g1 is the left section of a * x_active");

  const TWord y2 = tword_at(tr, "y2");
  rep.check(y2 == commutator(y1, h).conjugate(invert(g1)), "y2 = [y1, h]^(g1^-1) in K");
  const Word H = flatten(h), Y1 = flatten(y1), Y2 = flatten(y2);
  rep.check(are_equal(conjugate(invert(Y2), g1), commutator(H, Y1)), "(y2^-1)^g1 = [h, y1]");

  const Word y = word_at(tr, "y");
  rep.check(y == emb_pair(y1, y2), "y is emb_pair(y1, y2)");
  Decomposition d = decompose(y);
  rep.check(d.active == 0 && are_equal(d.left, Y1) && are_equal(d.right, Y2), "psi(y) = (y1, y2)");

  std::vector<Word> tower = commutator_tower(red.section, y, n + 1);
  std::vector<Word> inner = commutator_tower(H, Y1, n + 1);
  const json &steps = tr.at("steps");
  const json &witnesses = c.at("witnesses");
  rep.check(steps.size() == n && witnesses.size() == n, "one step and one witness per m = 1..N");
  if (steps.size() != n || witnesses.size() != n)
    return;
  for (unsigned m = 1; m <= n; ++m) {
    const std::string tag = " (m = " + std::to_string(m) + ")";
    const Word &t = tower[m];
    rep.check(steps[m - 1].at("length").get<std::size_t>() == t.size(), "tower length matches" + tag);
    rep.check(moves(t, vertex_of(witnesses[m - 1])), "[x,_(m+1) y] moves the witness vertex" + tag);
    Decomposition td = decompose(t);
    rep.check(td.active == 0 && are_equal(td.left, conjugate(inner[m], Y1)),
              "first section of [x,_(m+1) y] equals [h,_(m+1) y1]^y1" + tag);
    rep.check(!is_trivial(inner[m]), "[h,_(m+1) y1] is nontrivial" + tag);
  }
}

void verify_k_membership(VerifyReport &rep, const json &c) {
  const Word g = word_at(c.at("inputs"), "g");
  const json &tr = c.at("transcript");
  KMembershipResult now = membership_in_K(g);
  rep.check(tr.at("verdict").get<std::string>() == to_string(now.verdict), "verdict reproduces");
  rep.check(tr.at("level").get<unsigned>() == now.level, "decision level reproduces");
  auto plateau = certify_index_plateau();
  if (plateau)
    rep.check(tr.at("indices") == json(plateau->indices), "index sequence reproduces");
}

} // namespace

void VerifyReport::check(bool condition, const std::string &what) {
  (condition ? passed : failed).push_back(what);
  if (!condition)
    ok = false;
}

json to_certificate(const EngelSink &sink) {
  json c = envelope("EngelSink");
  c["inputs"] = {{"g", sink.g.str()}, {"x", sink.x.str()}};
  c["bound"] = sink.n;
  c["transcript"] = {{"lengths", lengths_json(sink.lengths)}};
  c["witnesses"] = json::array();
  return c;
}

json to_certificate(const NoSinkUpTo &w) {
  json c = envelope("NonEngelWitness");
  c["inputs"] = {{"g", w.g.str()}, {"x", w.x.str()}};
  c["bound"] = w.bound;
  c["transcript"] = {{"lengths", lengths_json(w.lengths)}};
  c["witnesses"] = json::array({w.witness.path()});
  return c;
}

json to_certificate(const BoundedLeftRefutation &r) {
  json c = envelope("BoundedLeftRefutation");
  c["inputs"] = {{"x", r.x.str()}, {"k", r.k.str()}};
  c["bound"] = r.bound;
  c["transcript"] = {{"reduction", reduction_json(r.reduction)},
                     {"k_order_exponent", r.k_order_exponent},
                     {"y", r.y.str()},
                     {"lengths", lengths_json(r.lengths)}};
  c["witnesses"] = json::array({r.witness.path()});
  return c;
}

json to_certificate(const RightRefutation &r) {
  json c = envelope("RightRefutation");
  c["inputs"] = {{"x", r.x.str()}, {"h", r.h.str()}, {"y1", r.y1.str()}};
  c["bound"] = r.bound;
  json steps = json::array(), witnesses = json::array();
  for (const RightStep &s : r.steps) {
    steps.push_back({{"m", s.m}, {"length", s.length}, {"lemma2_first_coordinate", s.lemma2_first_coordinate}});
    witnesses.push_back(s.witness.path());
  }
  c["transcript"] = {{"reduction", reduction_json(r.reduction)},
                     {"g1", r.g1.str()},
                     {"y2", r.y2.str()},
                     {"y", r.y.str()},
                     {"steps", steps}};
  c["witnesses"] = witnesses;
  return c;
}

json k_membership_certificate(const Word &g, const KMembershipResult &result) {
  json c = envelope("KMembership");
  c["inputs"] = {{"g", g.str()}};
  c["bound"] = result.level;
  auto plateau = certify_index_plateau();
  c["transcript"] = {{"verdict", to_string(result.verdict)},
                     {"level", result.level},
                     {"indices", plateau ? json(plateau->indices) : json::array()},
                     {"reason", result.reason}};
  c["witnesses"] = json::array();
  return c;
}

VerifyReport verify_certificate(const json &c) {
  VerifyReport rep;
  try {
    rep.kind = c.at("kind").get<std::string>();
    rep.check(c.at("schema").get<int>() == kCertificateSchema, "schema version is supported");
    if (rep.kind == "EngelSink")
      verify_sink(rep, c);
    else if (rep.kind == "NonEngelWitness")
      verify_nonengel(rep, c);
    else if (rep.kind == "BoundedLeftRefutation")
      verify_bounded_left(rep, c);
    else if (rep.kind == "RightRefutation")
      verify_right(rep, c);
    else if (rep.kind == "KMembership")
      verify_k_membership(rep, c);
    else
      rep.check(false, "known certificate kind");
  } catch (const std::exception &e) {
    rep.check(false, std::string("malformed certificate: ") + e.what());
  }
  return rep;
}

} // namespace grig
