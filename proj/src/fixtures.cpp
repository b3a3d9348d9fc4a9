#include "hk/fixtures.hpp"

namespace hk::fixtures {

namespace {

// Bundled texts are exact serializer output, so serialize(parse(text))
// reproduces them byte for byte.

constexpr std::string_view kP = R"(hyperring p
m 2
n 2
elements 0 1 u v w
zero 0
one 1
commutative add
commutative mul
add 0 0 -> 0
add 0 1 -> 1
add 0 u -> u
add 0 v -> v
add 0 w -> w
add 1 1 -> 1
add 1 u -> 1 u
add 1 v -> 0 1 u v w
add 1 w -> 1 w
add u u -> u
add u v -> u v
add u w -> 0 1 u v w
add v v -> v
add v w -> v w
add w w -> w
mul 0 0 -> 0
mul 0 1 -> 0
mul 0 u -> 0
mul 0 v -> 0
mul 0 w -> 0
mul 1 1 -> 1
mul 1 u -> u
mul 1 v -> v
mul 1 w -> w
mul u u -> v
mul u v -> w
mul u w -> 1
mul v v -> 1
mul v w -> u
mul w w -> v
endo inversion: 0->0 1->1 u->w v->v w->u
)";

constexpr std::string_view kG = R"(hyperring g
m 2
n 2
elements 0 1 u v
zero 0
one 1
commutative add
commutative mul
add 0 0 -> 0
add 0 1 -> 1
add 0 u -> u
add 0 v -> v
add 1 1 -> 0 u v
add 1 u -> 1 u
add 1 v -> 1 v
add u u -> 0 1 v
add u v -> u v
add v v -> 0 1 u
mul 0 0 -> 0
mul 0 1 -> 0
mul 0 u -> 0
mul 0 v -> 0
mul 1 1 -> 1
mul 1 u -> u
mul 1 v -> v
mul u u -> v
mul u v -> 1
mul v v -> u
endo conj: 0->0 1->1 u->v v->u
)";

constexpr std::string_view kS4Header = R"(m 2
n 4
elements 0 1 2 3
zero 0
)";

constexpr std::string_view kS4Rows = R"(commutative add
commutative mul
add 0 0 -> 0
add 0 1 -> 1
add 0 2 -> 2
add 0 3 -> 3
add 1 1 -> 0 1
add 1 2 -> 3
add 1 3 -> 2 3
add 2 2 -> 0
add 2 3 -> 1
add 3 3 -> 0 1
mul 0 0 0 0 -> 0
mul 0 0 0 1 -> 0
mul 0 0 0 2 -> 0
mul 0 0 0 3 -> 0
mul 0 0 1 1 -> 0
mul 0 0 1 2 -> 0
mul 0 0 1 3 -> 0
mul 0 0 2 2 -> 0
mul 0 0 2 3 -> 0
mul 0 0 3 3 -> 0
mul 0 1 1 1 -> 0
mul 0 1 1 2 -> 0
mul 0 1 1 3 -> 0
mul 0 1 2 2 -> 0
mul 0 1 2 3 -> 0
mul 0 1 3 3 -> 0
mul 0 2 2 2 -> 0
mul 0 2 2 3 -> 0
mul 0 2 3 3 -> 0
mul 0 3 3 3 -> 0
mul 1 1 1 1 -> 0
mul 1 1 1 2 -> 0
mul 1 1 1 3 -> 0
mul 1 1 2 2 -> 0
mul 1 1 2 3 -> 0
mul 1 1 3 3 -> 0
mul 1 2 2 2 -> 0
mul 1 2 2 3 -> 0
mul 1 2 3 3 -> 0
mul 1 3 3 3 -> 0
mul 2 2 2 2 -> 2
mul 2 2 2 3 -> 2
mul 2 2 3 3 -> 2
mul 2 3 3 3 -> 2
mul 3 3 3 3 -> 2
)";

std::string make_s4(bool with_one) {
    std::string out = with_one ? "hyperring s4\n" : "hyperring s4_no_one\n";
    out += kS4Header;
    if (with_one) out += "one 1\n";
    out += kS4Rows;
    return out;
}

const std::string kS4 = make_s4(true);
const std::string kS4NoOne = make_s4(false);

}  // namespace

std::string_view p_text() { return kP; }
std::string_view g_text() { return kG; }
std::string_view s4_text() { return kS4; }
std::string_view s4_no_one_text() { return kS4NoOne; }

const StructureFile& p() {
    static const StructureFile f = parse_structure(kP, "fixtures/p.hkr");
    return f;
}
const StructureFile& g() {
    static const StructureFile f = parse_structure(kG, "fixtures/g.hkr");
    return f;
}
const StructureFile& s4() {
    static const StructureFile f = parse_structure(kS4, "fixtures/s4.hkr");
    return f;
}
const StructureFile& s4_no_one() {
    static const StructureFile f = parse_structure(kS4NoOne, "fixtures/s4_no_one.hkr");
    return f;
}

}  // namespace hk::fixtures
