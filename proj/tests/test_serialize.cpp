#include <functional>

#include "doctest.h"
#include "mdsgrs/constructions.hpp"
#include "mdsgrs/serialize.hpp"

using namespace mdsgrs;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

SelfDualCode gf13_fixture() {
  auto f = make_field(13, 1);
  std::vector<Elem> a;
  for (int x : {0, 1, 2, 3}) a.push_back(f->from_int(x));
  return grs_self_dual(f, a, Provenance{"fixture", {}});
}

}  // namespace

TEST_CASE("field descriptor") {
  auto f = make_field(13, 2);
  const auto j = field_to_json(*f);
  CHECK(j.dump() == R"({"p":13,"m":2,"modulus":[1,3,1],"theta":2})");
  CHECK(field_from_json(j)->same_field(*f));

  auto g = make_field_with_modulus(13, 2, {2, 12, 1});
  auto back = field_from_json(field_to_json(*g));
  CHECK(back->same_field(*g));
  CHECK(!back->same_field(*f));
}

TEST_CASE("code JSON round trip") {
  auto f = make_field(3, 4);
  const auto code = th1_code(f, 9, 2, 1, 2);
  const auto j = code_to_json(code);
  CHECK(j["k"] == 18);
  CHECK(j["extended"] == false);
  CHECK(j["provenance"]["theorem"] == "th1");
  CHECK(j["provenance"]["params"]["t"] == 2);

  const auto back = code_from_string(j.dump());
  CHECK(back.eval.points == code.eval.points);
  CHECK(back.eval.multipliers == code.eval.multipliers);
  CHECK(back.k == code.k);
  CHECK(back.provenance.flat() == code.provenance.flat());
  CHECK(code_to_json(back).dump() == j.dump());

  auto g = make_field(13, 2);
  const auto ext = th3_code(g, 13, 2, 1, 2);
  const auto eback = code_from_json(code_to_json(ext));
  CHECK(eback.eval.extended);
  CHECK(eback.generator() == ext.generator());
}

TEST_CASE("generator text") {
  const auto code = gf13_fixture();
  const Field& f = code.field();
  std::string expected;
  for (auto row : {std::vector<int>{1, 6, 4, 8}, std::vector<int>{0, 6, 8, 11}}) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) expected += ' ';
      expected += std::to_string(f.from_int(row[i]).code());
    }
    expected += '\n';
  }
  CHECK(generator_text(code.generator()) == expected);
}

TEST_CASE("parse errors") {
  const auto good = code_to_json(gf13_fixture());
  CHECK(kind_of([] { code_from_string("{not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { code_from_string("[]"); }) == ErrorKind::ParseError);

  auto missing = good;
  missing.erase("v");
  CHECK(kind_of([&] { code_from_json(missing); }) == ErrorKind::ParseError);

  auto short_v = good;
  short_v["v"].erase(0);
  CHECK(kind_of([&] { code_from_json(short_v); }) == ErrorKind::ParseError);

  auto bad_k = good;
  bad_k["k"] = 3;
  CHECK(kind_of([&] { code_from_json(bad_k); }) == ErrorKind::ParseError);

  auto dup = good;
  dup["a"][1] = dup["a"][0];
  CHECK(kind_of([&] { code_from_json(dup); }) == ErrorKind::ParseError);

  auto out_of_field = good;
  out_of_field["a"][1] = 13;
  CHECK(kind_of([&] { code_from_json(out_of_field); }) == ErrorKind::ParseError);

  auto negative = good;
  negative["v"][0] = -1;
  CHECK(kind_of([&] { code_from_json(negative); }) == ErrorKind::ParseError);

  auto reducible = good;
  reducible["field"] = {{"p", 13}, {"m", 2}, {"modulus", {0, 0, 1}}, {"theta", 2}};
  CHECK(kind_of([&] { code_from_json(reducible); }) == ErrorKind::ParseError);

  auto composite = good;
  composite["field"]["p"] = 15;
  CHECK(kind_of([&] { code_from_json(composite); }) == ErrorKind::ParseError);

  auto ext = good;
  ext["extended"] = "no";
  CHECK(kind_of([&] { code_from_json(ext); }) == ErrorKind::ParseError);
}

TEST_CASE("field beyond the table limit is not a parse error") {
  const auto j = code_to_json(gf13_fixture());
  auto big = j;
  big["field"] = field_to_json(*make_field(5, 5));
  CHECK(kind_of([&] { code_from_json(big, 1000); }) == ErrorKind::TableLimitExceeded);
}
