#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "torusclass/tables.hpp"

using namespace torus;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(ReferenceTables, FixedOrder) {
  std::vector<std::string> ids;
  for (const auto& t : reference_tables()) ids.push_back(t.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"f_sizes", "max_rank_subgroups", "rep_dims", "codim_one_orbit", "two_factor",
                                           "so_even_families", "four_dim"}));
}

TEST(ReferenceTables, Deterministic) {
  auto a = reference_tables(), b = reference_tables();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].text, b[i].text);
}

TEST(ReferenceTables, MatchGoldenFiles) {
  for (const auto& t : reference_tables()) {
    const std::string path = std::string(GOLDEN_DIR) + "/" + t.id + ".txt";
    std::ifstream probe(path);
    ASSERT_TRUE(probe.good()) << "missing golden file " << path;
    EXPECT_EQ(t.text, slurp(path)) << t.id;
  }
}
