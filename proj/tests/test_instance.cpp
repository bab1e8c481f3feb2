#include <gtest/gtest.h>

#include "support.hpp"
#include "tiematch/error.hpp"
#include "tiematch/instance.hpp"

using namespace tiematch;

namespace {

const char* kSmall = R"(# two by two
men 2
women 2
m 0: 1 0
m 1: 0
w 0: (0 1)
w 1: (0)
)";

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Instance, ParsesListsAndTies) {
  const Instance inst = parse_instance(kSmall);
  EXPECT_EQ(inst.num_men(), 2);
  EXPECT_EQ(inst.num_women(), 2);
  EXPECT_EQ(inst.list(0), (std::vector<Woman>{1, 0}));
  EXPECT_EQ(inst.groups(0), (TieGroups{{0, 1}}));
  EXPECT_TRUE(inst.woman_indifferent(0, 0, 1));
  EXPECT_TRUE(inst.man_prefers(0, 1, 0));
  EXPECT_EQ(inst.num_edges(), 3);
  EXPECT_EQ(inst.man_rank(1, 1), kNone);
  EXPECT_FALSE(inst.adjacent(1, 1));
}

TEST(Instance, SerializeRoundTrips) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = generate_random(5, 4, 0.6, 0.5, seed);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(Instance, GroupsAreSortedSets) {
  const Instance inst = parse_instance("men 3\nwomen 1\nm 0: 0\nm 1: 0\nm 2: 0\nw 0: (2 0) (1)\n");
  EXPECT_EQ(inst.groups(0), (TieGroups{{0, 2}, {1}}));
  EXPECT_EQ(inst.neighbors(0), (std::vector<Man>{0, 2, 1}));
}

TEST(Instance, RejectsAsymmetricAdjacency) {
  EXPECT_EQ(code_of([] { parse_instance("men 1\nwomen 1\nm 0: 0\nw 0:\n"); }),
            ErrorCode::AsymmetricAdjacency);
}

TEST(Instance, RejectsDuplicates) {
  EXPECT_EQ(code_of([] { parse_instance("men 1\nwomen 1\nm 0: 0 0\nw 0: (0)\n"); }),
            ErrorCode::DuplicateEntry);
  EXPECT_EQ(code_of([] { parse_instance("men 1\nwomen 1\nm 0: 0\nw 0: (0) (0)\n"); }),
            ErrorCode::DuplicateEntry);
}

TEST(Instance, RejectsOutOfRangeIds) {
  RawInstance raw{1, 1, {{3}}, {{{0}}}};
  EXPECT_EQ(code_of([&] { validate(raw); }), ErrorCode::IdOutOfRange);
}

TEST(Instance, SyntaxErrorsCarryPosition) {
  try {
    parse_instance("men 1\nwomen 1\nm 0: x\nw 0: (0)\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 6);
  }
  EXPECT_EQ(code_of([] { parse_instance("men 1\nwomen 1\nm 0: 0\n"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_instance("men 1\nwomen 1\nm 0: 0\nw 0: ((0))\n"); }),
            ErrorCode::SyntaxError);
}

TEST(Instance, EmptyListsAreAllowed) {
  const Instance inst = parse_instance("men 2\nwomen 1\nm 0:\nm 1: 0\nw 0: (1)\n");
  EXPECT_TRUE(inst.list(0).empty());
  EXPECT_EQ(inst.num_edges(), 1);
}

TEST(Instance, GeneratorIsDeterministicAndSymmetric) {
  EXPECT_EQ(generate_random(6, 6, 0.5, 0.5, 9), generate_random(6, 6, 0.5, 0.5, 9));
  EXPECT_NE(generate_random(6, 6, 0.5, 0.5, 9), generate_random(6, 6, 0.5, 0.5, 10));
  const Instance full = generate_random(4, 3, 1.0, 0.0, 1);
  EXPECT_EQ(full.num_edges(), 12);
  for (Woman b = 0; b < 3; ++b) EXPECT_EQ(full.groups(b).size(), 4u);
  const Instance tied = generate_random(4, 3, 1.0, 1.0, 1);
  for (Woman b = 0; b < 3; ++b) EXPECT_EQ(tied.groups(b).size(), 1u);
  EXPECT_EQ(generate_random(3, 3, 0.0, 0.5, 1).num_edges(), 0);
  EXPECT_EQ(code_of([] { generate_random(2, 2, 1.5, 0, 1); }), ErrorCode::InvalidArgument);
}

TEST(Instance, RemovalsRenumber) {
  const Instance inst = parse_instance(kSmall);
  const Instance no_man0 = remove_man(inst, 0);
  EXPECT_EQ(no_man0.num_men(), 1);
  EXPECT_EQ(no_man0.list(0), (std::vector<Woman>{0}));
  EXPECT_EQ(no_man0.groups(0), (TieGroups{{0}}));
  EXPECT_TRUE(no_man0.groups(1).empty());

  const Instance no_woman0 = remove_woman(inst, 0);
  EXPECT_EQ(no_woman0.list(0), (std::vector<Woman>{0}));
  EXPECT_TRUE(no_woman0.list(1).empty());

  const Instance no_edge = remove_edge(inst, 0, 0);
  EXPECT_EQ(no_edge.num_edges(), 2);
  EXPECT_EQ(no_edge.groups(0), (TieGroups{{1}}));
}
