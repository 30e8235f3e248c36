#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "tropws/bounds.hpp"
#include "tropws/io.hpp"
#include "tropws/lambda.hpp"
#include "tropws/tropical.hpp"

using json = nlohmann::ordered_json;
using namespace tropws;

namespace {

std::string convention = "min";

WeightVector conv_weight(WeightVector w) {
    if (convention == "max")
        for (Rat& x : w) x = -x;
    return w;
}

json weight_json(WeightVector w) {
    w = conv_weight(std::move(w)); // involution: map back to the user's convention
    json a = json::array();
    for (const Rat& x : w) a.push_back(rat_string(x));
    return a;
}

json cone_json(const Cone& c) {
    json j;
    j["dim"] = c.dim;
    j["lineality_dim"] = c.lineality_dim;
    auto rows = [](const IMat& m) {
        json out = json::array();
        for (const auto& r : m) {
            json row = json::array();
            for (const Int& x : r) row.push_back(x.get_str());
            out.push_back(row);
        }
        return out;
    };
    j["ineqs"] = rows(c.ineqs);
    j["eqs"] = rows(c.eqs);
    return j;
}

json fan_json(const Fan& fan) {
    json j;
    json cones = json::array();
    for (const Cone& c : fan.cones) cones.push_back(cone_json(c));
    j["cones"] = cones;
    j["maximal"] = fan.maximal;
    return j;
}

json complex_json(const TropicalComplex& T) {
    json j;
    j["support_empty"] = T.empty();
    j["dim"] = T.dim();
    j["f_vector"] = complex_f_vector(T);
    json cones = json::array();
    for (const Cone& c : T.fan.cones) cones.push_back(cone_json(c));
    j["cones"] = cones;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

TermOrder order_from_flags(size_t n, const std::string& name, const std::string& weight) {
    TermOrder base = name == "lex" ? TermOrder::lex(n) : TermOrder::grevlex(n);
    if (weight.empty()) return base;
    return weight_refined_order(conv_weight(parse_weight(weight, n)), base);
}

std::vector<long> tail_f_vector(const std::vector<long>& f) { return f; }

// ------------------------------------------------------------------
// fixtures verb: reproduce the worked examples end to end

int run_fixtures() {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
        if (!ok) ++failures;
    };

    auto R3 = make_ring("x,y,z");
    std::vector<std::string> gens31 = {
        "x^2*y + x*y^2",       "x^2*z + x*z^2",       "y^2*z + y*z^2",
        "x^3 + x^2*y + x^2*z", "x*y^2 + y^3 + y^2*z", "x*z^2 + y*z^2 + z^3"};
    std::vector<Polynomial> ps31;
    for (const auto& s : gens31) ps31.push_back(parse_polynomial(s, R3));
    Ideal I31(R3, ps31);

    {
        UniversalBasis u = universal_groebner_basis(I31);
        report("cubic fixture: universal basis has 16 elements of degree 3",
               u.elements.size() == 16 && u.degree == 3);
        auto m = contains_monomial(I31, 12);
        report("cubic fixture: minimal monomial is x^2*y*z",
               m.has_value() && *m == Monomial{2, 1, 1});
        report("cubic fixture: tropical variety is empty", tropical_variety(I31).empty());
        TropicalBasisResult tb = compute_tropical_basis(I31);
        report("cubic fixture: computed tropical basis has degree 4", tb.degree == 4);
    }
    {
        auto R2 = make_ring("x,y");
        Ideal I32(R2, {parse_polynomial("x^5", R2),
                       parse_polynomial("x^4 + x^2*y^2 + y^4", R2),
                       parse_polynomial("y^5", R2)});
        report("quintic fixture: the three generators form a tropical basis",
               is_tropical_basis(I32, I32.generators()).is_basis);
    }
    {
        auto R6 = make_ring("x,y,z,w,u,v");
        Ideal D(R6, {parse_polynomial("x*y - z*w + u*v", R6)});
        UniversalBasis u = universal_groebner_basis(D);
        report("quadric fixture: universal basis is the generator alone",
               u.elements.size() == 1 && u.degree == 2);
        GroebnerFan gf = groebner_fan(D);
        report("quadric fixture: saturation exponent over the fan is 1",
               fan_saturation_exponent(D, gf) == 1);
        report("quadric fixture: degree bound 2*((2^1+2)/2)^(2^4) = 131072",
               eq2_mayr_ritscher(2, 6, 5) == Rat(131072));
        BoundReport chain = eq3_tropical_basis_bound(2, 1, 6, 2, 5);
        report("quadric fixture: degree chain is [6, 12, 786432]",
               chain.chain[0].second == 6 && chain.chain[1].second == 12 &&
                   chain.chain[2].second == 786432);
        TropicalComplex T = tropical_variety(D, gf);
        auto f = complex_f_vector(T);
        report("quadric fixture: tropical variety has 1 cell of dim 4, 3 of dim 5",
               T.dim() == 5 && f[4] == 1 && f[5] == 3);
    }
    {
        struct Row { int d, n; std::vector<long> want; };
        std::vector<Row> table = {
            {1, 2, {2}},      {2, 2, {2}},       {3, 2, {2}},
            {4, 2, {2}},      {5, 2, {2}},       {1, 3, {3, 3}},
            {2, 3, {4, 4}},   {3, 3, {6, 6}},    {4, 3, {6, 6}},
            {5, 3, {8, 8}},   {1, 4, {4, 6, 4}}, {2, 4, {7, 12, 8}},
            {3, 4, {12, 18, 10}}, {1, 5, {5, 10, 10, 5}}, {2, 5, {11, 30, 30, 10}},
        };
        bool ok = true;
        for (const Row& row : table) {
            LambdaResult r = lambda_enumerate(row.d, row.n);
            if (!r.exact || r.values != row.want) {
                ok = false;
                std::cout << "   mismatch at (d=" << row.d << ", n=" << row.n << ")\n";
            }
        }
        report("lattice width table: all exhaustive entries reproduced", ok);
    }
    std::cout << (failures == 0 ? "all fixtures passed\n"
                                : std::to_string(failures) + " fixture(s) failed\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropws: exact Groebner fans, tropical varieties, and bound calculators"};
    app.require_subcommand(0, 1);
    app.add_option("--convention", convention, "weight convention for input/output")
        ->check(CLI::IsMember({"min", "max"}))
        ->default_str("min");
    bool fixtures_flag = false;
    app.add_flag("--fixtures", fixtures_flag, "run the example reproduction suite");

    std::string file, weight, basis_file, order_name = "grevlex", points;
    bool as_json = false, as_csv = false, table = false;
    long pd = 0, pn = 0, pr = 0, ps = 1, pj = 0, pe = 0, pD = 0, pN = 0, degu = 1, palpha = 0;
    unsigned long long budget = 400'000ULL;
    size_t cone_budget = SIZE_MAX;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", file, "ideal file")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_common(gb, true);
    gb->add_option("--order", order_name)->check(CLI::IsMember({"grevlex", "lex"}));
    gb->add_option("-w,--weight", weight, "weight vector, e.g. 1,0,0");

    CLI::App* gfan_cmd = app.add_subcommand("gfan", "Groebner fan traversal");
    add_common(gfan_cmd, true);
    gfan_cmd->add_option("--budget", cone_budget, "maximal cone budget");

    CLI::App* universal = app.add_subcommand("universal", "universal Groebner basis");
    add_common(universal, true);

    CLI::App* trop = app.add_subcommand("trop", "tropical variety");
    add_common(trop, true);

    CLI::App* prevariety = app.add_subcommand("prevariety", "tropical prevariety of the generators");
    add_common(prevariety, true);

    CLI::App* tb_check = app.add_subcommand("tbasis-check", "tropical basis test");
    add_common(tb_check, true);
    tb_check->add_option("--basis", basis_file, "candidate basis file")->required();

    CLI::App* tbasis = app.add_subcommand("tbasis", "compute a tropical basis");
    add_common(tbasis, true);

    CLI::App* witness = app.add_subcommand("witness", "witness polynomial at a weight");
    add_common(witness, true);
    witness->add_option("-w,--weight", weight, "weight vector")->required();

    CLI::App* fvector = app.add_subcommand("fvector", "Newton polytope f-vectors");
    add_common(fvector, false);
    fvector->add_option("file", file, "ideal file");
    fvector->add_option("--points", points, "semicolon-separated lattice points");

    CLI::App* lambda_cmd = app.add_subcommand("lambda", "lattice polytope f-vector maxima");
    lambda_cmd->add_option("-d", pd)->required(false);
    lambda_cmd->add_option("-n", pn);
    lambda_cmd->add_option("--budget", budget, "hull evaluation budget");
    lambda_cmd->add_flag("--json", as_json);
    lambda_cmd->add_flag("--csv", as_csv);
    lambda_cmd->add_flag("--table", table, "emit the full table for d,n <= 5");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form bound calculators");
    bounds_cmd->require_subcommand(1);
    std::map<std::string, CLI::App*> bsub;
    for (const char* name : {"eq2", "eq3", "eq4", "eq5", "prop", "lambda0", "pluecker", "gbsize"})
        bsub[name] = bounds_cmd->add_subcommand(name);
    for (auto& [name, sub] : bsub) {
        sub->add_option("-d", pd);
        sub->add_option("-n", pn);
        sub->add_option("-r", pr);
        sub->add_option("-s", ps);
        sub->add_option("-j", pj);
        sub->add_option("-e", pe);
        sub->add_option("-D", pD);
        sub->add_option("-N", pN);
        sub->add_option("--degu", degu);
        sub->add_option("--alpha", palpha);
        sub->add_flag("--json", as_json);
    }

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "run the example reproduction suite");
    (void)fixtures_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fixtures_flag || app.got_subcommand("fixtures")) return run_fixtures();
        if (app.get_subcommands().empty()) {
            std::cout << app.help();
            return 2;
        }

        if (app.got_subcommand(gb)) {
            Ideal I = read_ideal_file(file);
            TermOrder ord = order_from_flags(I.n(), order_name, weight);
            auto G = I.reduced_basis(ord);
            if (as_json) {
                json j;
                j["order"] = order_name;
                if (!weight.empty()) j["weight"] = weight_json(parse_weight(weight, I.n()));
                json b = json::array();
                for (const Polynomial& p : G->elements()) b.push_back(p.to_string());
                j["basis"] = b;
                j["degree"] = G->degree();
                emit(j);
            } else {
                for (const Polynomial& p : G->elements()) std::cout << p.to_string() << "\n";
            }
        } else if (app.got_subcommand(gfan_cmd)) {
            Ideal I = read_ideal_file(file);
            GroebnerFan gf = groebner_fan(I, TermOrder::grevlex(I.n()), cone_budget);
            json j = fan_json(gf.fan);
            json bases = json::array();
            for (const auto& B : gf.bases) {
                json b = json::array();
                for (const Polynomial& p : B->elements()) b.push_back(p.to_string());
                bases.push_back(b);
            }
            j["bases"] = bases;
            if (as_json) {
                emit(j);
            } else {
                std::cout << "maximal cones: " << gf.fan.maximal.size() << "\n";
                std::cout << "cones by dimension:";
                for (long c : gf.fan.f_vector()) std::cout << " " << c;
                std::cout << "\n";
            }
        } else if (app.got_subcommand(universal)) {
            Ideal I = read_ideal_file(file);
            UniversalBasis u = universal_groebner_basis(I);
            if (as_json) {
                json j;
                json b = json::array();
                for (const Polynomial& p : u.elements) b.push_back(p.to_string());
                j["basis"] = b;
                j["degree"] = u.degree;
                emit(j);
            } else {
                for (const Polynomial& p : u.elements) std::cout << p.to_string() << "\n";
                std::cout << "degree " << u.degree << "\n";
            }
        } else if (app.got_subcommand(trop)) {
            Ideal I = read_ideal_file(file);
            TropicalComplex T = tropical_variety(I);
            if (as_json) {
                emit(complex_json(T));
            } else {
                std::cout << (T.empty() ? "empty" : "nonempty") << ", dim " << T.dim()
                          << ", f-vector:";
                for (long c : tail_f_vector(complex_f_vector(T))) std::cout << " " << c;
                std::cout << "\n";
            }
        } else if (app.got_subcommand(prevariety)) {
            Ideal I = read_ideal_file(file);
            TropicalComplex T = tropical_prevariety(I.generators());
            if (as_json) {
                emit(complex_json(T));
            } else {
                std::cout << (T.empty() ? "empty" : "nonempty") << ", dim " << T.dim()
                          << ", f-vector:";
                for (long c : complex_f_vector(T)) std::cout << " " << c;
                std::cout << "\n";
            }
        } else if (app.got_subcommand(tb_check)) {
            Ideal I = read_ideal_file(file);
            Ideal B = read_ideal_file(basis_file);
            if (!B.ring()->same_as(*I.ring()))
                throw domain_error("candidate basis uses a different ring");
            TropicalBasisCheck c = is_tropical_basis(I, B.generators());
            if (as_json) {
                json j;
                j["is_tropical_basis"] = c.is_basis;
                if (c.counterexample) j["counterexample"] = weight_json(*c.counterexample);
                emit(j);
            } else if (c.is_basis) {
                std::cout << "tropical basis: yes\n";
            } else {
                std::cout << "tropical basis: no\ncounterexample weight:";
                for (const Rat& x : conv_weight(*c.counterexample))
                    std::cout << " " << rat_string(x);
                std::cout << "\n";
            }
            return c.is_basis ? 0 : 0; // a negative answer is still a success
        } else if (app.got_subcommand(tbasis)) {
            Ideal I = read_ideal_file(file);
            TropicalBasisResult r = compute_tropical_basis(I);
            TropicalComplex T = tropical_variety(I);
            if (as_json) {
                json j = complex_json(T);
                json b = json::array();
                for (const Polynomial& p : r.basis) b.push_back(p.to_string());
                j["basis"] = b;
                j["degree"] = r.degree;
                json chain;
                chain["observed"] = r.degree;
                chain["max_degU_alpha_n"] = rat_string(r.chain_max);
                chain["n_degU"] = rat_string(r.chain_n_degu);
                chain["eq3"] = r.chain_eq3 ? rat_string(*r.chain_eq3) : "n/a";
                j["bound_chain"] = chain;
                emit(j);
            } else {
                for (const Polynomial& p : r.basis) std::cout << p.to_string() << "\n";
                std::cout << "degree " << r.degree << " (universal " << r.universal_degree
                          << ", witnesses " << r.witnesses_added << ")\n";
                std::cout << "chain: observed " << r.degree << " <= max(degU, alpha*n) "
                          << rat_string(r.chain_max) << " <= n*degU "
                          << rat_string(r.chain_n_degu) << " <= "
                          << (r.chain_eq3 ? rat_string(*r.chain_eq3) : std::string("n/a"))
                          << "\n";
            }
        } else if (app.got_subcommand(witness)) {
            Ideal I = read_ideal_file(file);
            WeightVector w = conv_weight(parse_weight(weight, I.n()));
            Polynomial f = find_witness(I, w);
            if (as_json) {
                json j;
                j["witness"] = f.to_string();
                j["initial_form"] = initial_form(w, f).to_string();
                emit(j);
            } else {
                std::cout << f.to_string() << "\n";
            }
        } else if (app.got_subcommand(fvector)) {
            std::vector<Polytope> polys;
            std::vector<std::string> labels;
            if (!points.empty()) {
                std::vector<LPoint> pts;
                std::istringstream ss(points);
                std::string chunk;
                while (std::getline(ss, chunk, ';')) {
                    LPoint p;
                    std::istringstream cs(chunk);
                    std::string num;
                    while (std::getline(cs, num, ',')) p.push_back(std::stoll(num));
                    pts.push_back(std::move(p));
                }
                polys.push_back(Polytope::hull(pts));
                labels.push_back("points");
            } else if (!file.empty()) {
                Ideal I = read_ideal_file(file);
                for (const Polynomial& g : I.generators()) {
                    polys.push_back(newton_polytope(g));
                    labels.push_back(g.to_string());
                }
            } else {
                throw domain_error("fvector needs a file or --points");
            }
            json out = json::array();
            for (size_t i = 0; i < polys.size(); ++i) {
                json j;
                j["input"] = labels[i];
                j["dim"] = polys[i].dim();
                j["f_vector"] = polys[i].f_vector();
                out.push_back(j);
                if (!as_json) {
                    std::cout << labels[i] << ": dim " << polys[i].dim() << ", f =";
                    for (long c : polys[i].f_vector()) std::cout << " " << c;
                    std::cout << "\n";
                }
            }
            if (as_json) emit(out);
        } else if (app.got_subcommand(lambda_cmd)) {
            if (table) {
                std::cout << "n\\d";
                for (int d = 1; d <= 5; ++d) std::cout << ",d=" << d;
                std::cout << "\n";
                for (int n = 2; n <= 5; ++n) {
                    std::cout << n;
                    for (int d = 1; d <= 5; ++d) {
                        LambdaResult r = lambda_enumerate(d, n, budget);
                        std::cout << ",(";
                        for (size_t j = 0; j < r.values.size(); ++j)
                            std::cout << r.values[j] << (j + 1 < r.values.size() ? " " : "");
                        std::cout << ")" << (r.exact ? "" : "*");
                    }
                    std::cout << "\n";
                }
                return 0;
            }
            if (pd < 1 || pn < 2) throw domain_error("lambda needs -d >= 1 and -n >= 2");
            LambdaResult r = lambda_enumerate(static_cast<int>(pd), static_cast<int>(pn), budget);
            if (as_json) {
                json j;
                j["d"] = r.d;
                j["n"] = r.n;
                j["values"] = r.values;
                j["exact"] = r.exact;
                j["nodes"] = r.nodes;
                json wits = json::array();
                for (const auto& w : r.witnesses) {
                    json pts_json = json::array();
                    for (const LPoint& p : w) pts_json.push_back(p);
                    wits.push_back(pts_json);
                }
                j["witnesses"] = wits;
                emit(j);
            } else if (as_csv) {
                for (size_t j = 0; j < r.values.size(); ++j)
                    std::cout << r.values[j] << (j + 1 < r.values.size() ? "," : "");
                std::cout << (r.exact ? "" : ",*") << "\n";
            } else {
                for (long v : r.values) std::cout << v << " ";
                std::cout << (r.exact ? "(exact)" : "(lower bound)") << "\n";
            }
        } else if (app.got_subcommand(bounds_cmd)) {
            auto put = [&](const std::string& label, const Rat& v) {
                if (as_json) {
                    json j;
                    j["inputs"] = {{"d", pd}, {"n", pn}, {"r", pr}, {"s", ps},
                                   {"j", pj}, {"e", pe}, {"D", pD}, {"N", pN}};
                    j["chain"] = json::array({json{{"label", label},
                                                   {"value", rat_string(v)}}});
                    emit(j);
                } else {
                    std::cout << rat_string(v) << "\n";
                }
            };
            if (bsub["eq2"]->parsed()) {
                put("2*((d^(n-r)+d)/2)^(2^(r-1))", eq2_mayr_ritscher(pd, pn, pr));
            } else if (bsub["eq3"]->parsed()) {
                BoundReport rep = eq3_tropical_basis_bound(degu, palpha, pn, pd, pr);
                if (as_json) {
                    json j;
                    json inputs;
                    for (auto& [k, v] : rep.inputs) inputs[k] = v;
                    j["inputs"] = inputs;
                    json chain = json::array();
                    for (auto& [label, v] : rep.chain)
                        chain.push_back(json{{"label", label}, {"value", rat_string(v)}});
                    j["chain"] = chain;
                    j["consistent"] = rep.consistent;
                    if (!rep.note.empty()) j["note"] = rep.note;
                    emit(j);
                } else {
                    for (auto& [label, v] : rep.chain)
                        std::cout << label << " = " << rat_string(v) << "\n";
                    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
                }
            } else if (bsub["eq4"]->parsed()) {
                put("unimodular triangulation f_j", Rat(eq4_unimodular_fvector(pd, pn, pj)));
            } else if (bsub["eq5"]->parsed()) {
                put("hypersurface cell bound", Rat(eq5_hypersurface_bound(pd, pn, pj)));
            } else if (bsub["prop"]->parsed()) {
                put("variety cell bound", Rat(prop_variety_fvector_bound(ps, pd, pn, pj)));
            } else if (bsub["lambda0"]->parsed()) {
                put("vertex bound", Rat(lambda0_vertex_bound(pd, pn)));
            } else if (bsub["pluecker"]->parsed()) {
                PlueckerBound p = pluecker_degree_bound(pD, pN);
                if (as_json) {
                    json j;
                    j["inputs"] = {{"D", pD}, {"N", pN}};
                    j["n"] = p.n;
                    j["r"] = p.r;
                    j["chain"] = json::array({json{{"label", "tropical basis degree bound"},
                                                   {"value", p.bound.get_str()}}});
                    emit(j);
                } else {
                    std::cout << p.bound.get_str() << "\n";
                }
            } else if (bsub["gbsize"]->parsed()) {
                put("reduced basis cardinality bound", Rat(gb_cardinality_bound(pe, pn)));
            }
        }
        return 0;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error at position " << e.pos + 1 << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
