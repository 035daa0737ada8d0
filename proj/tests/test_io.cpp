#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "mub/io.hpp"

using namespace mub;

namespace {

std::string error_message(std::string_view text, ErrorCode expected) {
  try {
    parse_collection(text);
  } catch (const Error& e) {
    CHECK(e.code() == expected);
    // Drop the "ParseError: " style prefix so callers see the path first.
    const std::string what = e.what();
    return what.substr(what.find(": ") + 2);
  }
  FAIL("no error thrown");
  return {};
}

}  // namespace

TEST_CASE("round trip is bit-exact") {
  for (std::size_t d : {2u, 3u, 8u}) {
    CollectionFile f{construct_complete_mub(d), "test"};
    const std::string text = serialize(f);
    const CollectionFile g = parse_collection(text);
    CHECK(g.provenance == "test");
    CHECK(g.collection.dim == d);
    CHECK(g.collection.tol == f.collection.tol);
    REQUIRE(g.collection.bases.size() == d + 1);
    for (std::size_t k = 0; k <= d; ++k) CHECK(g.collection.bases[k].matrix() == f.collection.bases[k].matrix());
    CHECK(serialize(g) == text);
  }
}

TEST_CASE("document layout") {
  const std::string text = serialize({MubCollection{1, {Basis(ComplexMatrix::identity(1))}, 0.5}, "p"});
  CHECK(text == "{\"format_version\":1,\"d\":1,\"tol\":0.5,\"provenance\":\"p\",\"bases\":[[[[1.0,0.0]]]]}\n");
}

TEST_CASE("non-unitary basis is rejected by index") {
  auto c = construct_complete_mub(3);
  ComplexMatrix m = c.bases[2].matrix();
  m(0, 0) += 0.01;
  c.bases[2] = Basis(m);
  const std::string msg = error_message(serialize({c, ""}), ErrorCode::ValidationError);
  CHECK(msg.find("basis 2") != std::string::npos);
}

TEST_CASE("malformed documents name the offending path") {
  CHECK(error_message("{", ErrorCode::ParseError).rfind("/:", 0) == 0);
  CHECK(error_message("[]", ErrorCode::ParseError).find("/") == 0);
  CHECK(error_message(R"({"d":2,"tol":1e-9,"bases":[]})", ErrorCode::ParseError).find("/format_version") == 0);
  CHECK(error_message(R"({"format_version":2,"d":2,"tol":1e-9,"bases":[]})", ErrorCode::ParseError)
            .find("/format_version") == 0);
  CHECK(error_message(R"({"format_version":1,"d":-2,"tol":1e-9,"bases":[]})", ErrorCode::ParseError)
            .find("/d") == 0);
  CHECK(error_message(R"({"format_version":1,"d":65,"tol":1e-9,"bases":[]})", ErrorCode::ParseError)
            .find("/d") == 0);
  CHECK(error_message(R"({"format_version":1,"d":2,"tol":0,"bases":[]})", ErrorCode::ParseError)
            .find("/tol") == 0);
  CHECK(error_message(R"({"format_version":1,"d":1,"tol":1e-9,"bases":[[[[1,0]]], [[[1,"x"]]]]})",
                      ErrorCode::ParseError)
            .find("/bases/1/0/0/1") == 0);
  CHECK(error_message(R"({"format_version":1,"d":2,"tol":1e-9,"bases":[[[[1,0],[0,0]]]]})",
                      ErrorCode::ParseError)
            .find("/bases/0") == 0);
  CHECK(error_message(R"({"format_version":1,"d":2,"tol":1e-9,"bases":[[[[1,0],[0,0]],[[0,0],[1]]]]})",
                      ErrorCode::ParseError)
            .find("/bases/0/1/1") == 0);
}

TEST_CASE("a stored d = 7 collection verifies after reading") {
  const auto path = std::filesystem::temp_directory_path() / "mub_io_test_d7.json";
  write_text(path.string(), serialize({construct_complete_mub(7), "d7"}));
  const auto f = read_collection(path.string());
  std::filesystem::remove(path);
  const auto r = verify_collection(f.collection);
  CHECK(r.pass);
  CHECK(r.basis_count == 8);
  CHECK(r.max_unbiased_dev <= 1e-10);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(read_collection("/nonexistent/dir/file.json"), std::runtime_error);
}

TEST_CASE("report JSON contains verdicts and residuals") {
  auto c = construct_complete_mub(3);
  c.bases.pop_back();
  const auto r = complete_collection(c);
  const std::string text = completion_report_json(r);
  CHECK(text.find("\"status\": \"completed\"") != std::string::npos);
  CHECK(text.find("\"verdict\": \"subalgebra\"") != std::string::npos);
  CHECK(text.find("\"kraus_projection_gap\"") != std::string::npos);
  const std::string v = verify_report_json(*r.final_verify);
  CHECK(v.find("\"pass\": true") != std::string::npos);
}
