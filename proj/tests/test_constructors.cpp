#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "catindex/constructors.hpp"
#include "catindex/enumerate.hpp"
#include "catindex/indices.hpp"

using namespace catindex;

TEST_CASE("caterpillar C(n,m)") {
  const Tree c33 = caterpillar(3, 3);
  CHECK(c33.vertex_count() == 12);
  CHECK(c33.degree_sequence() == std::vector<int>{5, 4, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1});

  CHECK(caterpillar(1, 4).degree_sequence() == std::vector<int>{4, 1, 1, 1, 1});  // star
  CHECK(caterpillar(5, 0).degree_sequence() == std::vector<int>{2, 2, 2, 1, 1});  // path

  SUBCASE("spine degrees for n >= 3 are m+1 at the ends, m+2 inside") {
    const Tree t = caterpillar(6, 4);
    CHECK(t.degree(0) == 5);
    CHECK(t.degree(5) == 5);
    for (int v = 1; v < 5; ++v) CHECK(t.degree(v) == 6);
  }
  SUBCASE("leaves occupy consecutive indices after the spine") {
    const Tree t = caterpillar(3, 2);
    for (int v = 3; v < 9; ++v) CHECK(t.degree(v) == 1);
    CHECK(t.adjacent(0, 3));
    CHECK(t.adjacent(0, 4));
    CHECK(t.adjacent(1, 5));
    CHECK(t.adjacent(2, 8));
  }
  SUBCASE("vertex cap") {
    CHECK_THROWS_AS((void)caterpillar(100, 3, 50), Error);
    try {
      (void)caterpillar(100, 3, 50);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SizeOverflow);
    }
  }
}

TEST_CASE("from_code") {
  CHECK(from_code(CaterpillarCode{{2}}).degree_sequence() == std::vector<int>{2, 1, 1});
  CHECK(from_code(CaterpillarCode{{3, 3, 3}}) == caterpillar(3, 3));
  CHECK(from_code(CaterpillarCode{{1, 0, 1}}).degree_sequence() ==
        std::vector<int>{2, 2, 2, 1, 1});

  CHECK_THROWS_AS((void)from_code(CaterpillarCode{{0, 1}}), Error);
  CHECK_THROWS_AS((void)from_code(CaterpillarCode{{1, 0}}), Error);
  CHECK_THROWS_AS((void)from_code(CaterpillarCode{{}}), Error);
  CHECK_THROWS_AS((void)from_code(CaterpillarCode{{-1}}), Error);
}

TEST_CASE("caterpillar equals the uniform code, vertex for vertex") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m)
      CHECK(caterpillar(n, m) ==
            from_code(CaterpillarCode{std::vector<std::int64_t>(n, m)}));
}

TEST_CASE("deleting all leaves of C(n,m) leaves the n-vertex spine") {
  for (int n = 3; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m) {
      const CaterpillarCode code = encode_caterpillar(caterpillar(n, m));
      CHECK(static_cast<int>(code.leaf_counts.size()) == n);
    }
}

TEST_CASE("level trees") {
  CHECK(level_tree(LevelTreeSpec{{2}}).degree_sequence() == std::vector<int>{2, 1, 1});

  const Tree t34 = level_tree(LevelTreeSpec{{3, 4}});
  CHECK(t34.vertex_count() == 16);
  const std::vector<int> degs = t34.degree_sequence();
  CHECK(std::count(degs.begin(), degs.end(), 5) == 3);
  CHECK(std::count(degs.begin(), degs.end(), 3) == 1);
  CHECK(std::count(degs.begin(), degs.end(), 1) == 12);

  CHECK(level_tree(LevelTreeSpec{{3, 4, 5}}).vertex_count() == 76);

  CHECK_THROWS_AS((void)level_tree(LevelTreeSpec{{}}), Error);
  CHECK_THROWS_AS((void)level_tree(LevelTreeSpec{{1000, 1000, 1000}}), Error);  // cap
}

TEST_CASE("spiders") {
  CHECK(spider({1, 1, 1, 1}) == caterpillar(1, 4));
  CHECK(spider({1, 2}).degree_sequence() == std::vector<int>{2, 2, 1, 1});  // P4

  const Tree s = spider({2, 2, 2});
  CHECK(s.vertex_count() == 7);
  CHECK(*compute(s, IndexKind::albertson()).exact == 6);  // Delta(Delta-1)

  CHECK_THROWS_AS((void)spider({}), Error);
  CHECK_THROWS_AS((void)spider({0, 2}), Error);
}

TEST_CASE("spiders with uniform legs realize irr = Delta(Delta-1)") {
  for (int delta = 2; delta <= 8; ++delta)
    for (std::int64_t len : {1, 2, 3, 4, 5}) {
      const Tree s = spider(std::vector<std::int64_t>(delta, len));
      CHECK(*compute(s, IndexKind::albertson()).exact ==
            static_cast<std::int64_t>(delta) * (delta - 1));
    }
}

TEST_CASE("code canonicalization") {
  CHECK(CaterpillarCode{{1, 0, 2}}.canonical());
  CHECK_FALSE(CaterpillarCode{{2, 0, 1}}.canonical());
  CHECK(CaterpillarCode{{2, 0, 1}}.canonicalized() == CaterpillarCode{{1, 0, 2}});
  CHECK(CaterpillarCode{{1, 1}}.canonical());
  CHECK(CaterpillarCode{{3}}.vertex_count() == 4);
  CHECK(CaterpillarCode{{1, 0, 2}}.str() == "1,0,2");
}

TEST_CASE("tree-spec mini-language") {
  CHECK(parse_tree_spec("cat:n=3,m=3") == caterpillar(3, 3));
  CHECK(parse_tree_spec("cat:m=3,n=3") == caterpillar(3, 3));
  CHECK(parse_tree_spec("code:1,0,2,0,1") == from_code(CaterpillarCode{{1, 0, 2, 0, 1}}));
  CHECK(parse_tree_spec("level:3,4,5").vertex_count() == 76);
  CHECK(parse_tree_spec("spider:2,2,2") == spider({2, 2, 2}));
  CHECK(parse_tree_spec("path:7") == caterpillar(7, 0));
  CHECK(parse_tree_spec("star:9") == caterpillar(1, 8));

  const std::string path = "spec_roundtrip.edges";
  {
    std::ofstream out(path);
    write_edge_list(caterpillar(4, 2), out);
  }
  CHECK(parse_tree_spec("file:" + path) == caterpillar(4, 2));
  std::remove(path.c_str());

  CHECK_THROWS_AS((void)parse_tree_spec("cat:n=3"), Error);
  CHECK_THROWS_AS((void)parse_tree_spec("nonsense:1"), Error);
  CHECK_THROWS_AS((void)parse_tree_spec("path:"), Error);
  CHECK_THROWS_AS((void)parse_tree_spec("cat"), Error);
  CHECK_THROWS_AS((void)parse_tree_spec("code:1,,2"), Error);
  CHECK_THROWS_AS((void)parse_tree_spec("file:/does/not/exist"), Error);
}
