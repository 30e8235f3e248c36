#include "tropws/io.hpp"
#include "tropws/error.hpp"

#include <fstream>
#include <sstream>

namespace tropws {

Ideal read_ideal(std::istream& in, const std::string& name) {
    std::string line;
    size_t lineno = 0;
    RingPtr ring;
    std::vector<Polynomial> gens;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string body = line.substr(a, b - a + 1);
        if (body.empty() || body[0] == '#') continue;
        if (!ring) {
            if (body.rfind("ring", 0) != 0)
                throw domain_error(name + ":" + std::to_string(lineno) +
                                   ": expected a `ring x,y,...` header line");
            ring = make_ring(body.substr(4));
            continue;
        }
        Polynomial p;
        try {
            p = parse_polynomial(body, ring);
        } catch (const parse_error& e) {
            throw domain_error(name + ":" + std::to_string(lineno) + ":" +
                               std::to_string(e.pos + 1) + ": " + e.what());
        }
        if (p.is_zero())
            throw domain_error(name + ":" + std::to_string(lineno) +
                               ": generator is the zero polynomial");
        gens.push_back(std::move(p));
    }
    if (!ring) throw domain_error(name + ": missing `ring` header");
    if (gens.empty()) throw domain_error(name + ": no generators");
    return Ideal(ring, std::move(gens));
}

Ideal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot read file: " + path);
    return read_ideal(in, path);
}

WeightVector parse_weight(const std::string& text, size_t n) {
    WeightVector w;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) throw domain_error("empty weight entry");
        size_t b = cur.find_last_not_of(" \t");
        try {
            Rat q(cur.substr(a, b - a + 1));
            q.canonicalize();
            w.push_back(q);
        } catch (const std::exception&) {
            throw domain_error("bad weight entry: " + cur);
        }
    }
    if (w.size() != n)
        throw domain_error("weight vector has " + std::to_string(w.size()) +
                           " entries, expected " + std::to_string(n));
    return w;
}

} // namespace tropws
