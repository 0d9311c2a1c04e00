#include "kantor/algebra_json.hpp"
#include "kantor/constructions.hpp"
#include "kantor/kantor.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace kantor;

TEST(Json, GoldenText) {
  Algebra<Scalar> a(2, Field::rational());
  a.labels = {"a", "b"};
  a.add_product("m").set(0, 1, 1, Scalar::fraction(-1, 2));
  EXPECT_EQ(to_json_text(a),
            "{\n  \"dim\": 2,\n  \"field\": {\"type\": \"rational\"},\n  \"products\": {\n    \"m\": [\n"
            "      [0, 1, 1, \"-1/2\"]\n    ]\n  },\n  \"labels\": [\"a\", \"b\"]\n}\n");
}

TEST(Json, ScalarRoundTripProperty) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    Algebra<Scalar> a = testgen::algebra(rng, 1 + trial % 4, {"m", "o"});
    AnyAlgebra back = algebra_from_text(to_json_text(a));
    auto* s = std::get_if<Algebra<Scalar>>(&back);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->product("m"), a.product("m"));
    EXPECT_EQ(s->product("o"), a.product("o"));
    EXPECT_EQ(to_json_text(*s), to_json_text(a));
  }
}

TEST(Json, GenericRoundTrip) {
  Algebra<Scalar> m2 = matrix_algebra(2);
  Algebra<Poly> k = kantor_product_algebra(m2, "m", "m", generic_element(4));
  std::string text = to_json_text(k);
  EXPECT_NE(text.find("\"-u0\""), std::string::npos);
  AnyAlgebra back = algebra_from_text(text);
  auto* p = std::get_if<Algebra<Poly>>(&back);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->product("m"), k.product("m"));
}

TEST(Json, PrimeField) {
  AnyAlgebra a = algebra_from_text(R"({"dim":1,"field":{"type":"prime","p":7},"products":{"m":[[0,0,0,"3/2"]]}})");
  const auto& s = std::get<Algebra<Scalar>>(a);
  EXPECT_EQ(s.field.characteristic(), 7u);
  EXPECT_EQ(s.product("m").get(0, 0, 0) * Scalar(2).in_field(7), Scalar(3).in_field(7));
  EXPECT_NE(to_json_text(s).find("\"prime\", \"p\": 7"), std::string::npos);
}

TEST(Json, IntegerCoefficientsAccepted) {
  AnyAlgebra a = algebra_from_text(R"({"dim":2,"products":{"m":[[0,0,1,-3]]}})");
  EXPECT_EQ(std::get<Algebra<Scalar>>(a).product("m").get(0, 0, 1), Scalar(-3));
}

TEST(Json, Errors) {
  for (const char* bad : {
           "{",
           "[]",
           R"({"products":{}})",
           R"({"dim":0,"products":{}})",
           R"({"dim":2})",
           R"({"dim":2,"products":{"m":[[0,0,2,"1"]]}})",
           R"({"dim":2,"products":{"m":[[0,0,1,"1"],[0,0,1,"2"]]}})",
           R"({"dim":2,"products":{"m":[[0,0,1]]}})",
           R"({"dim":2,"products":{"m":[[0,0,1,1.5]]}})",
           R"({"dim":2,"products":{"m":[]},"labels":["a","a"]})",
           R"({"dim":2,"products":{"m":[]},"labels":["a"]})",
           R"({"dim":2,"field":{"type":"real"},"products":{"m":[]}})",
           R"({"dim":2,"field":{"type":"prime","p":4},"products":{"m":[]}})",
       })
    EXPECT_THROW(algebra_from_text(bad), std::runtime_error) << bad;
  EXPECT_THROW(algebra_from_text(R"({"dim":1,"products":{"m":[[0,0,0,"1/0"]]}})"), InputError);
  EXPECT_THROW(load_algebra("/nonexistent/file.json"), InputError);
}

TEST(Json, SampleDirectory) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "kantor_json_samples";
  fs::remove_all(dir);
  fs::create_directories(dir);
  save_algebra((dir / "b.json").string(), matrix_algebra(2));
  save_algebra((dir / "a.json").string(), lie_cross());
  std::ofstream(dir / "notes.txt") << "ignored";
  auto samples = load_sample_dir(dir.string());
  ASSERT_EQ(samples.size(), 2u);
  EXPECT_EQ(samples[0].dim, 3u);
  EXPECT_EQ(samples[1].dim, 4u);
  fs::remove_all(dir);
  EXPECT_THROW(load_sample_dir(dir.string()), InputError);
}
