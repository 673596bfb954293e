#include <doctest.h>

#include "grig/certificate.hpp"

using namespace grig;
using nlohmann::json;

namespace {

Word w(const char *s) { return Word::reduce(s); }

json roundtrip(const json &c) { return json::parse(c.dump()); }

} // namespace

TEST_CASE("envelope shape") {
  json c = to_certificate(std::get<EngelSink>(left_engel_probe(w("a"), w("b"), 10)));
  for (const char *key : {"schema", "engine_version", "kind", "inputs", "bound", "transcript", "witnesses"})
    CHECK(c.contains(key));
  CHECK(c["schema"] == kCertificateSchema);
  CHECK(c["kind"] == "EngelSink");
  CHECK(c["bound"] == 4);
}

TEST_CASE("emitted certificates verify") {
  std::vector<json> certs;
  certs.push_back(to_certificate(std::get<EngelSink>(left_engel_probe(w("a"), w("b"), 10))));
  certs.push_back(to_certificate(std::get<NoSinkUpTo>(left_engel_probe(w("ad"), w("cabababab"), 10))));
  certs.push_back(to_certificate(replay_bounded_left(w("a"), 3, 10000)));
  certs.push_back(to_certificate(replay_bounded_left(w("d"), 4, 10000)));
  certs.push_back(to_certificate(replay_right(w("a"), 2, 1000, 1)));
  certs.push_back(k_membership_certificate(w("abab"), membership_in_K(w("abab"))));
  certs.push_back(k_membership_certificate(w("b"), membership_in_K(w("b"))));
  for (const json &c : certs) {
    VerifyReport r = verify_certificate(roundtrip(c));
    INFO(c.dump());
    CHECK(r.ok);
    CHECK(r.failed.empty());
    CHECK_FALSE(r.passed.empty());
    CHECK(r.kind == c["kind"]);
  }
}

TEST_CASE("tampered certificates are rejected") {
  json sink = to_certificate(std::get<EngelSink>(left_engel_probe(w("a"), w("b"), 10)));
  json s1 = sink;
  s1["bound"] = 3;
  CHECK_FALSE(verify_certificate(s1).ok);
  json s2 = sink;
  s2["bound"] = 5;
  CHECK_FALSE(verify_certificate(s2).ok);

  json left = to_certificate(replay_bounded_left(w("a"), 3, 10000));
  json l1 = left;
  l1["transcript"]["k_order_exponent"] = 7;
  CHECK_FALSE(verify_certificate(l1).ok);
  json l2 = left;
  l2["witnesses"][0] = "0";
  CHECK_FALSE(verify_certificate(l2).ok);
  json l3 = left;
  l3["inputs"]["x"] = "ab";
  CHECK_FALSE(verify_certificate(l3).ok);

  json right = to_certificate(replay_right(w("a"), 2, 1000, 1));
  json r1 = right;
  r1["transcript"]["y2"] = "1^+1";
  CHECK_FALSE(verify_certificate(r1).ok);

  json member = k_membership_certificate(w("b"), membership_in_K(w("b")));
  member["transcript"]["verdict"] = "Inside";
  CHECK_FALSE(verify_certificate(member).ok);
}

TEST_CASE("malformed input gives a failed report") {
  CHECK_FALSE(verify_certificate(json::object()).ok);
  CHECK_FALSE(verify_certificate(json::array()).ok);
  json c = to_certificate(std::get<EngelSink>(left_engel_probe(w("a"), w("b"), 10)));
  c["inputs"]["g"] = "axe";
  CHECK_FALSE(verify_certificate(c).ok);
  c = to_certificate(std::get<EngelSink>(left_engel_probe(w("a"), w("b"), 10)));
  c["kind"] = "Unheard";
  CHECK_FALSE(verify_certificate(c).ok);
  c = to_certificate(std::get<EngelSink>(left_engel_probe(w("a"), w("b"), 10)));
  c["schema"] = 99;
  CHECK_FALSE(verify_certificate(c).ok);
}

TEST_CASE("certificates are byte-identical across runs") {
  std::string a = to_certificate(replay_bounded_left(w("a"), 4, 10000, 1)).dump();
  std::string b = to_certificate(replay_bounded_left(w("a"), 4, 10000, 1)).dump();
  CHECK(a == b);
}
