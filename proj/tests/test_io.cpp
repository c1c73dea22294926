#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "uakit/harness.hpp"
#include "uakit/io.hpp"
#include "uakit/samples.hpp"
#include "uakit/transforms.hpp"

namespace uakit {
namespace {

TEST(Io, FhRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FHModel k = gen_fh({2, 3, 2}, seed);
    const json doc = fh_to_json(k);
    EXPECT_EQ(document_kind(doc), "fh");
    EXPECT_EQ(fh_to_json(fh_from_json(doc)), doc);
  }
}

TEST(Io, HmsRoundTrip) {
  std::vector<HMSModel> ms{unaware_q_model(), implicit_q_ikb_model(), twins_model()};
  for (std::uint64_t seed = 0; seed < 10; ++seed) ms.push_back(gen_ikb({3, 2, 2}, seed, GenStrategy::Direct).model);
  for (const HMSModel& m : ms) {
    const json doc = hms_to_json(m);
    EXPECT_EQ(document_kind(doc), "hms");
    const HMSModel back = hms_from_json(doc);
    EXPECT_EQ(hms_to_json(back), doc);
    EXPECT_TRUE(find_isomorphism(m, back).has_value());
  }
}

TEST(Io, CategoryRoundTrip) {
  const FHCategory c = build_category(gen_fh({2, 3, 1}, 4), RestrictMode::Quotient);
  const json doc = category_to_json(c);
  EXPECT_EQ(document_kind(doc), "fh-category");
  const FHCategory back = category_from_json(doc);
  EXPECT_EQ(back.mode, RestrictMode::Quotient);
  EXPECT_EQ(back.models.size(), c.models.size());
  EXPECT_TRUE(validate_category(back).ok());
  EXPECT_TRUE(category_dump(c).is_object());
}

TEST(Io, Fixtures) {
  EXPECT_EQ(hms_to_json(hms_from_json(read_json_file(test::fixture("unaware-q.json")))), hms_to_json(unaware_q_model()));
  EXPECT_EQ(hms_to_json(hms_from_json(read_json_file(test::fixture("implicit-q.json")))), hms_to_json(implicit_q_model()));
  EXPECT_EQ(hms_to_json(hms_from_json(read_json_file(test::fixture("implicit-q-ikb.json")))),
            hms_to_json(implicit_q_ikb_model()));
  EXPECT_EQ(fh_to_json(fh_from_json(read_json_file(test::fixture("unaware-q-fh.json")))), fh_to_json(unaware_q_fh()));
  EXPECT_EQ(fh_to_json(fh_from_json(read_json_file(test::fixture("implicit-q-fh.json")))), fh_to_json(implicit_q_fh()));
}

TEST(Io, Errors) {
  EXPECT_THROW(read_json_file("/nonexistent/model.json"), IoError);
  EXPECT_THROW(fh_from_json(json{{"kind", "fh"}}), FormatError);
  EXPECT_THROW(hms_from_json(json::array()), FormatError);
  json doc = hms_to_json(unaware_q_model());
  doc["valuation"]["p"] = {"nowhere"};
  EXPECT_THROW(hms_from_json(doc), FormatError);
  const auto tmp = std::filesystem::temp_directory_path() / "uakit-io-test.json";
  {
    std::ofstream out(tmp);
    out << "{ not json";
  }
  EXPECT_THROW(read_json_file(tmp.string()), FormatError);
  std::filesystem::remove(tmp);
}

TEST(Io, WriteAndRead) {
  const auto tmp = std::filesystem::temp_directory_path() / "uakit-io-roundtrip.json";
  const json doc = fh_to_json(unaware_q_fh());
  write_json_file(tmp.string(), doc, false);
  EXPECT_EQ(read_json_file(tmp.string()), doc);
  std::filesystem::remove(tmp);
}

TEST(Io, Reports) {
  const auto t = hms_transform(unaware_q_fh());
  const json tr = trace_to_json(t.trace, unaware_q_fh(), t.model);
  EXPECT_EQ(tr["target"], "hms");
  const json r = report_to_json(validate_hms(unaware_q_model()));
  EXPECT_EQ(r["ok"], true);
  const json pr = report_to_json(property_suite(twins_model()));
  EXPECT_EQ(pr["ok"], true);
  EXPECT_EQ(digest(tr), digest(tr));
  EXPECT_NE(digest(tr), digest(r));
}

}  // namespace
}  // namespace uakit
