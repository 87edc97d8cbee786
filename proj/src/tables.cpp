#include "gkfol/classify.hpp"

namespace gkfol {

namespace {

// One component per line: p q r [s] lambda. Mirrors the files under data/.
const std::string kTableN3D2 = R"(# components of the degree-3 classification, n = 3
7 6 4 8
7 3 2 4
6 5 2 4
4 3 2 4
4 2 1 2
3 2 1 2
)";

const std::string kTableN3D3 = R"(# components of the degree-4 classification, n = 3
13 12 9 27
13 8 6 18
13 4 3 9
12 7 3 9
9 8 6 18
9 6 4 12
9 4 3 9
9 3 2 6
8 3 2 6
6 5 3 9
6 3 2 6
4 3 2 6
3 2 1 3
)";

const std::string kTableN4D2 = R"(# components of the degree-3 classification, n = 4
15 14 12 8 16
15 7 6 4 8
14 11 6 4 8
12 8 3 2 4
8 7 6 4 8
8 4 3 2 4
7 4 3 2 4
6 5 4 2 4
6 5 3 2 4
4 3 2 1 2
)";

} // namespace

const std::string& builtin_table_text(const std::string& table_id) {
    if (table_id == "cor48_d2") return kTableN3D2;
    if (table_id == "cor48_d3") return kTableN3D3;
    if (table_id == "cor411") return kTableN4D2;
    throw InvalidInput("no built-in text for table id: " + table_id);
}

std::vector<std::string> builtin_table_ids() {
    return {"cor48_d2", "cor48_d3", "cor411", "cor410"};
}

} // namespace gkfol
