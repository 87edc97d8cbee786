// Exit-code and output contract of the command-line tool, driven end to end.
// Usage: test_cli <path-to-gkfol-binary> <path-to-data-dir>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gkfol/classify.hpp"

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

bool contains(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <gkfol-binary> <data-dir>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const std::string data = argv[2];

    {
        RunResult r = run(bin + " params -w 7,6,4 -l 8 -d 2");
        expect(r.exit_code == 0, "params exit 0");
        expect(contains(r.out, "tau:      25"), "params prints tau");
        expect(contains(r.out, "lambda_i: -1"), "params prints lambda_1 = -1");
        expect(contains(r.out, "p_bar:    7 3 1"), "params prints the flip weights");
    }
    {
        RunResult r = run(bin + " params -w 4,2,1 -l 3 -d 2");
        expect(r.exit_code == 0, "params exit 0 on tau_2 = 0 family");
        expect(contains(r.out, "note: tau_2 = 0"), "params highlights tau_2 = 0");
    }
    {
        RunResult r = run(bin + " params -w 2,2,1 -l 1 -d 2");
        expect(r.exit_code == 2, "duplicate weights exit 2");
    }
    {
        RunResult r = run(bin + " w0 -w 4,2,1 -l 3 -d 2");
        expect(r.exit_code == 0, "w0 exit 0");
        expect(contains(r.out, "dim W0 = 4"), "w0 dimension 4");
        expect(contains(r.out, "d/dx"), "w0 prints fields in the display grammar");
    }
    {
        expect(run(bin + " dim -w 4,2,1 -l 3 -d 2").out == "15\n", "dim 15");
        expect(run(bin + " dim -w 7,6,4 -l 8 -d 2").out == "14\n", "dim 14");
        RunResult r = run(bin + " dim -w 9,5,1 -l -30 -d 2");
        expect(r.exit_code == 1, "dim exit 1 on empty family");
    }
    {
        RunResult r = run(bin + " check -w 8,7,3 -l 1 -d 2");
        expect(r.exit_code == 1, "check exit 1 when no chain holds");
    }
    {
        RunResult r = run(bin + " check -w 7,6,4 -l 8 -d 2 --out /tmp/gkfol_cert_test.txt");
        expect(r.exit_code == 0, "check certifies the reference family");
        RunResult v = run(bin + " verify --cert /tmp/gkfol_cert_test.txt");
        expect(v.exit_code == 0, "certificate replays from file");
        expect(contains(v.out, "pass"), "verify --cert reports pass");
    }
    {
        RunResult r = run(bin + " enumerate -n 3 -d 2 --format csv");
        expect(r.exit_code == 0, "enumerate exit 0");
        int rows = 0;
        std::istringstream is(r.out);
        std::string line;
        while (std::getline(is, line))
            if (!line.empty() && line[0] != '#' && line.rfind("weights", 0) != 0) ++rows;
        expect(rows == 6, "enumerate csv has 6 rows");
    }
    {
        RunResult a = run(bin + " enumerate -n 3 -d 2 --certify --format csv --seed 5");
        RunResult b = run(bin + " enumerate -n 3 -d 2 --certify --format csv --seed 5");
        expect(a.exit_code == 0, "certified enumerate exit 0");
        expect(a.out == b.out, "identical seed gives byte-identical output");
        expect(contains(a.out, "# seed: 5"), "seed echoed in the output header");
    }
    {
        RunResult r = run(bin + " verify --table cor411");
        expect(r.exit_code == 0, "verify table exit 0");
        expect(contains(r.out, "10/10 matched"), "verify table counts 10/10");
        RunResult bad = run(bin + " verify --table nosuch");
        expect(bad.exit_code == 2, "unknown table exit 2");
    }
    {
        RunResult r = run(bin + " chains -n 4");
        expect(r.exit_code == 0, "chains exit 0");
        expect(contains(r.out, "b2 i=3"), "chains lists b2 i=3");
    }
    {
        RunResult r = run(bin + " exceptional -n 3 -d 2 --format csv");
        expect(r.exit_code == 0, "exceptional certifies");
        expect(contains(r.out, "7 6 4,8,2,Exceptional,14,yes"), "exceptional row");
    }
    {
        RunResult r = run(bin + " enumerate -n 3 -d 2 --format json");
        expect(r.exit_code == 0, "json enumerate exit 0");
        expect(!r.out.empty() && r.out[0] == '{', "json output shape");
        expect(contains(r.out, "\"seed\""), "json carries the seed");
    }
    {
        RunResult r = run("GKFOL_BUDGET=10 " + bin + " check -w 7,6,4 -l 8 -d 2");
        expect(r.exit_code == 1, "tiny budget yields no certificate, exit 1");
    }
    {
        expect(run(bin + " check -w 10,8,6,1 -l 2 -d 2").exit_code == 1,
               "non-GK family rejected by the chain screen");
        expect(run(bin + " enumerate -n 3 -d 1").exit_code == 2, "enumerate rejects d = 1");
        expect(run(bin + " enumerate -n 5 -d 2").exit_code == 2, "enumerate rejects n = 5");
        expect(run(bin + " chains -n 2").exit_code == 2, "chains reject n = 2");
    }

    // Data files carry the same rows as the built-in tables, byte for byte.
    for (const std::string id : {"cor48_d2", "cor48_d3", "cor411"}) {
        std::ifstream in(data + "/" + id + ".txt");
        expect(static_cast<bool>(in), "data file exists: " + id);
        std::stringstream buf;
        buf << in.rdbuf();
        expect(buf.str() == gkfol::builtin_table_text(id), "data file matches built-in: " + id);
    }

    if (failures == 0) std::cout << "cli: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
