#include <doctest.h>

#include "idealmatch/automata.hpp"
#include "idealmatch/error.hpp"
#include "idealmatch/random.hpp"
#include "idealmatch/text_format.hpp"
#include "idealmatch/witnesses.hpp"

using namespace idealmatch;

namespace {

std::string error_of(std::string_view text) {
    try {
        (void)parse_automaton(text);
    } catch (const input_error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("dfa round trip") {
    const auto t = witness({Family::PrefixGeneral, Role::Text, 0, 3});
    const auto text = serialize_dfa(t);
    CHECK(text ==
          "dfa\n"
          "alphabet: a b\n"
          "states: 3\n"
          "initial: 0\n"
          "finals: 2\n"
          "0 : 1 0\n"
          "1 : 2 1\n"
          "2 : 0 2\n");
    CHECK(parse_dfa(text) == t);
    CHECK(isomorphic(parse_dfa(serialize_dfa(bm_dfa(4))), bm_dfa(4)));

    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const auto d = random_dfa(rng, letters_alphabet(1 + i % 3), 1 + i % 7);
        REQUIRE(parse_dfa(serialize_dfa(d)) == d);
    }
    const auto sub = witness({Family::SubsequenceGeneral, Role::Pattern, 5, 0});
    CHECK(parse_dfa(serialize_dfa(sub)) == sub);
}

TEST_CASE("comments, blank lines and empty final sets") {
    const auto d = parse_dfa(
        "# two states\n"
        "dfa\n\n"
        "alphabet: x\n"
        "states: 2   # trailing comment\n"
        "initial: 1\n"
        "finals:\n"
        "0 : 1\n"
        "1 : 0\n");
    CHECK(d.state_count() == 2);
    CHECK(d.initial() == 1);
    CHECK(d.finals().empty());
    CHECK(serialize_dfa(d).find("finals:\n") != std::string::npos);
    CHECK(parse_dfa(serialize_dfa(d)) == d);
}

TEST_CASE("nfa round trip") {
    const auto n = parse_nfa(
        "nfa\n"
        "alphabet: a b\n"
        "states: 3\n"
        "initial: 0\n"
        "finals: 2\n"
        "0 : {0,1} {0}\n"
        "1 : {} {2}\n"
        "2 : {} {}\n");
    CHECK(n.next(0, 0) == Nfa::StateSet{0, 1});
    CHECK(n.next(1, 0).empty());
    CHECK(parse_nfa(serialize_nfa(n)) == n);
    CHECK(std::holds_alternative<Nfa>(parse_automaton(serialize_nfa(n))));
    CHECK(std::holds_alternative<Dfa>(parse_automaton(serialize_dfa(bm_dfa(3)))));
}

TEST_CASE("malformed input names the line") {
    const std::string header = "dfa\nalphabet: a b\nstates: 4\n";
    CHECK(error_of(header + "initial: 9\nfinals: 0\n0 : 0 0\n1 : 0 0\n2 : 0 0\n3 : 0 0\n")
              .find("state 9 out of range") != std::string::npos);
    CHECK(error_of(header + "initial: 0\nfinals: 0\n0 : 0 0\n1 : 0 7\n2 : 0 0\n3 : 0 0\n")
              .find("line 7: state 7 out of range") != std::string::npos);
    CHECK(error_of(header + "initial: 0\nfinals: 0\n0 : 0\n").find("line 6") != std::string::npos);
    CHECK(error_of(header + "initial: 0\nfinals: 0\n0 : 0 0\n") != "");
    CHECK(error_of("automaton\n").find("line 1") != std::string::npos);
    CHECK(error_of("") != "");
}

TEST_CASE("dot output") {
    const auto dot = to_dot(bm_dfa(2));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);
}
