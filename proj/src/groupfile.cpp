#include <fstream>
#include <sstream>

#include "quillen/atlas.hpp"
#include "quillen/errors.hpp"

namespace quillen {

// Group-spec text format, line oriented:
//   # quillen-group v1
//   name <string>
//   degree <n>
//   claim order <N>        (optional)
//   gen (a b c)(d e) ...   (1-based cycles, one generator per line)
//   meta field <q>         (optional)
LabeledGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open group file: " + path);
    std::string line, name;
    std::uint32_t degree = 0;
    bool have_degree = false;
    std::optional<BigInt> claim;
    std::optional<std::uint32_t> meta_q;
    std::vector<Permutation> gens;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError(path + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        std::size_t s = line.find_first_not_of(" \t");
        if (s == std::string::npos) continue;
        line = line.substr(s);
        if (line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "name") {
            std::getline(ls, name);
            std::size_t p = name.find_first_not_of(" \t");
            name = p == std::string::npos ? "" : name.substr(p);
        } else if (key == "degree") {
            if (!(ls >> degree) || degree == 0) fail("bad degree");
            have_degree = true;
        } else if (key == "claim") {
            std::string sub, num;
            ls >> sub >> num;
            if (sub != "order" || num.empty()) fail("expected 'claim order <N>'");
            try {
                claim = BigInt(num);
            } catch (...) {
                fail("bad claim order value");
            }
        } else if (key == "meta") {
            std::string sub;
            std::uint32_t q;
            ls >> sub >> q;
            if (sub == "field") meta_q = q;
        } else if (key == "gen") {
            if (!have_degree) fail("gen before degree");
            std::string rest;
            std::getline(ls, rest);
            try {
                gens.push_back(parse_cycles(rest, degree));
            } catch (const ParseError& e) {
                fail(e.what());
            }
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (!have_degree) throw ParseError(path + ": missing degree line");
    LabeledGroup out;
    out.family = Family::File;
    out.name = name.empty() ? path : name;
    out.group = PermGroup::from_generators(gens, degree);
    if (meta_q && field_supported(*meta_q)) {
        out.q = *meta_q;
        out.field = make_field(*meta_q);
    }
    if (claim && out.group.order() != *claim) {
        std::ostringstream msg;
        msg << path << ": claimed order " << *claim << " but constructed order is "
            << out.group.order();
        throw ConstructionError(msg.str());
    }
    return out;
}

void save_group_file(const LabeledGroup& g, const std::string& path,
                     const std::optional<BigInt>& claim) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write group file: " + path);
    out << "# quillen-group v1\n";
    out << "name " << g.name << "\n";
    out << "degree " << g.group.degree() << "\n";
    if (claim) out << "claim order " << *claim << "\n";
    if (g.q) out << "meta field " << g.q << "\n";
    for (const auto& p : g.group.generators()) out << "gen " << p.cycle_string() << "\n";
}

} // namespace quillen
