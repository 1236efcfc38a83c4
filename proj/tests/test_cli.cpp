// Drives the installed CLI binary end to end: determinism of seeded output,
// exit-code contract, and the generate -> verify round trip.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& cmd) {
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return {127, ""};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAILED: " << what << "\n";
        ++failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string tmp = "cli_test_tmp";

    // counting, exact output format
    {
        const RunResult r = run(cli + " count T 4");
        expect(r.exit_code == 0, "count T 4 exits 0");
        expect(r.output == "n_I = 2 (dim 6, rank 4)\n", "count T 4 prints the documented line");
    }
    {
        const RunResult r = run(cli + " count L41 -p a12=1 -p a23=0 -p a34=-1");
        expect(r.output == "n_I = 3 (dim 7, rank 4)\n", "special L41 member counts 3");
        const RunResult g = run(cli + " count L41 -p a12=1 -p a23=2 -p a34=3");
        expect(g.output == "n_I = 1 (dim 7, rank 6)\n", "generic L41 member counts 1");
        // the same member through direct flags
        const RunResult d = run(cli + " count L41 --a12 1 --a23 0 --a34 -1");
        expect(d.output == "n_I = 3 (dim 7, rank 4)\n", "direct member flags work");
    }

    // same seed, same argv: byte-identical output
    {
        const std::string cmd = cli + " count full-rank 6 --seed 17 --trials 4";
        const RunResult a = run(cmd), b = run(cmd);
        expect(a.exit_code == 0 && a.output == b.output, "seeded count is reproducible");
        const RunResult c = run(cli + " invariants prop1 -M 5 --format json");
        const RunResult d = run(cli + " invariants prop1 -M 5 --format json");
        expect(c.output == d.output && !c.output.empty(), "catalog output is reproducible");
    }

    // generate -> verify round trip for the whole nilpotent basis
    {
        expect(run(cli + " gen T 5 --out " + tmp + "_t5.json").exit_code == 0, "gen T 5");
        const RunResult inv = run(cli + " invariants theorem1 -M 5 --format json");
        expect(inv.exit_code == 0, "theorem1 catalog");
        // pull the invariant strings out of the JSON by a minimal scan
        std::vector<std::string> texts;
        std::size_t pos = inv.output.find("\"invariants\"");
        while (pos != std::string::npos) {
            pos = inv.output.find('"', inv.output.find('[', pos));
            while (pos != std::string::npos && inv.output[pos] == '"') {
                const std::size_t end = inv.output.find('"', pos + 1);
                texts.push_back(inv.output.substr(pos + 1, end - pos - 1));
                std::size_t next = inv.output.find_first_not_of(",\n ", end + 1);
                pos = (next != std::string::npos && inv.output[next] == '"') ? next
                                                                             : std::string::npos;
            }
            break;
        }
        expect(texts.size() == 2, "theorem1 at M = 5 lists two invariants");
        for (const std::string& t : texts) {
            const RunResult v =
                run(cli + " verify --algebra " + tmp + "_t5.json --invariant '" + t + "'");
            expect(v.exit_code == 0, "verify accepts " + t);
        }
        const RunResult bad =
            run(cli + " verify --algebra " + tmp + "_t5.json --invariant '1*n_1_2'");
        expect(bad.exit_code == 1, "verify rejects a non-invariant with exit 1");
    }

    // solvable spec file round trip
    {
        expect(run(cli + " gen L42 -p sigma12=1/2 --out " + tmp + "_l42.json").exit_code == 0,
               "gen L42");
        const RunResult n = run(cli + " count L 4 2 " + tmp + "_l42.json");
        expect(n.output == "n_I = 2 (dim 8, rank 6)\n", "count from spec file");
    }

    // a generated solvable algebra accepts its own catalog entry, logs included
    {
        expect(run(cli + " gen L43 --out " + tmp + "_l43.json").exit_code == 0, "gen L43");
        const RunResult fam = run(cli + " invariants lemma3");
        const std::size_t nl = fam.output.find("\n  ");
        expect(nl != std::string::npos, "lemma3 listing has an invariant line");
        const std::size_t end = fam.output.find('\n', nl + 3);
        const std::string inv = fam.output.substr(nl + 3, end - nl - 3);
        const RunResult v =
            run(cli + " verify --algebra " + tmp + "_l43.json --invariant '" + inv + "'");
        expect(v.exit_code == 0, "lemma3 invariant verifies against its regenerated algebra");
        std::remove((tmp + "_l43.json").c_str());
    }

    // usage errors exit 2
    expect(run(cli + " count").exit_code == 2, "missing target exits 2");
    expect(run(cli + " count Q 4").exit_code == 2, "unknown target exits 2");
    expect(run(cli + " verify --algebra does_not_exist.json --invariant 1").exit_code == 2,
           "missing file exits 2");
    expect(run(cli + " frobnicate").exit_code != 0, "unknown subcommand fails");

    std::remove((tmp + "_t5.json").c_str());
    std::remove((tmp + "_l42.json").c_str());

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failures\n";
    return 1;
}
