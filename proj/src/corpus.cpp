#include "triring/corpus.hpp"

#include <fstream>
#include <regex>
#include <set>

#include "triring/triquaternion.hpp"

namespace triring::corpus {

namespace {

Table zmod_add(int n) {
    Table t(n, std::vector<Index>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

Table zmod_mul(int n) {
    Table t(n, std::vector<Index>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a * b) % n;
    return t;
}

}  // namespace

FiniteTriring make_te(int n, int m) {
    if (n < 1 || m < 1 || n % m != 0)
        throw HypothesisError("TE(n,m) needs m >= 1 dividing n");
    FiniteCommutativeRing even;
    even.size = n;
    even.add = zmod_add(n);
    even.mul = zmod_mul(n);
    even.one = 1 % n;
    OddPartRing odd;
    odd.size = m;
    odd.add = zmod_add(m);
    odd.sharp = zmod_mul(m);
    odd.localOne = 1 % m;
    BimoduleAction act;
    act.left.assign(n, std::vector<Index>(m));
    act.right.assign(m, std::vector<Index>(n));
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < m; ++a) {
            Index v = ((x % m) * a) % m;
            act.left[x][a] = v;
            act.right[a][x] = v;
        }
    return make_triring("TE(" + std::to_string(n) + "," + std::to_string(m) + ")",
                        std::move(even), std::move(odd), std::move(act));
}

bool is_rational_backend(const std::string& name) { return name == "TQ-rational"; }

bool is_builtin_name(const std::string& name) {
    static const std::regex te(R"(TE\((\d+),(\d+)\))");
    static const std::regex tq(R"(TQ-modp\((\d+)\))");
    return std::regex_match(name, te) || std::regex_match(name, tq) ||
           is_rational_backend(name);
}

FiniteTriring make_builtin(const std::string& name) {
    static const std::regex te(R"(TE\((\d+),(\d+)\))");
    static const std::regex tq(R"(TQ-modp\((\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, te)) return make_te(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(name, m, tq)) return tq::make_tq_modp(std::stoi(m[1]));
    if (is_rational_backend(name))
        throw BackendError("TQ-rational has no finite table backend; "
                           "element arithmetic and axiom checks only");
    throw Error("unknown builtin '" + name + "'");
}

// ---------------------------------------------------------------------------
// Description files

namespace {

Table table_from_json(const json& j) {
    Table t;
    for (const auto& row : j) {
        t.emplace_back();
        for (const auto& v : row) t.back().push_back(v.get<Index>());
    }
    return t;
}

json table_to_json(const Table& t) {
    json j = json::array();
    for (const auto& row : t) j.push_back(row);
    return j;
}

}  // namespace

FiniteTriring triring_from_json(const json& doc) {
    std::string name = doc.value("name", "unnamed");
    const json& je = doc.at("even");
    const json& jo = doc.at("odd");
    const json& ja = doc.at("action");

    FiniteCommutativeRing even;
    OddPartRing odd;
    int zn = -1, zm = -1;
    if (je.at("kind") == "zmod") {
        zn = je.at("n").get<int>();
        even.size = zn;
        even.add = zmod_add(zn);
        even.mul = zmod_mul(zn);
        even.one = 1 % zn;
    } else if (je.at("kind") == "table") {
        even.add = table_from_json(je.at("add"));
        even.mul = table_from_json(je.at("mul"));
        even.size = static_cast<int>(even.add.size());
        even.one = je.at("one").get<Index>();
    } else {
        throw MalformedTableError("even.kind must be 'zmod' or 'table'");
    }
    if (jo.at("kind") == "zmod-sharp") {
        zm = jo.at("m").get<int>();
        odd.size = zm;
        odd.add = zmod_add(zm);
        odd.sharp = zmod_mul(zm);
        odd.localOne = 1 % zm;
    } else if (jo.at("kind") == "table") {
        odd.add = table_from_json(jo.at("add"));
        odd.sharp = table_from_json(jo.at("sharp"));
        odd.size = static_cast<int>(odd.add.size());
        odd.localOne = jo.at("localOne").get<Index>();
    } else {
        throw MalformedTableError("odd.kind must be 'zmod-sharp' or 'table'");
    }

    BimoduleAction act;
    if (ja.at("kind") == "reduction") {
        if (zn < 0 || zm < 0 || zm == 0 || zn % zm != 0)
            throw MalformedTableError(
                "reduction action needs zmod parts with the odd modulus dividing the even one");
        act.left.assign(zn, std::vector<Index>(zm));
        act.right.assign(zm, std::vector<Index>(zn));
        for (int x = 0; x < zn; ++x)
            for (int a = 0; a < zm; ++a) {
                Index v = ((x % zm) * a) % zm;
                act.left[x][a] = v;
                act.right[a][x] = v;
            }
    } else if (ja.at("kind") == "table") {
        act.left = table_from_json(ja.at("left"));
        act.right = table_from_json(ja.at("right"));
    } else {
        throw MalformedTableError("action.kind must be 'reduction' or 'table'");
    }

    FiniteTriring R = make_triring(name, std::move(even), std::move(odd), std::move(act));
    ValidationReport rep = validate_triring(R);
    if (!rep.ok()) {
        const AxiomCheck* f = rep.first_failure();
        throw Error("axiom failure in '" + name + "': " + f->axiom + " [" + f->witness + "]");
    }
    return R;
}

json triring_to_json(const FiniteTriring& R) {
    json doc;
    doc["name"] = R.name;
    doc["even"] = {{"kind", "table"},
                   {"add", table_to_json(R.even.add)},
                   {"mul", table_to_json(R.even.mul)},
                   {"one", R.even.one}};
    doc["odd"] = {{"kind", "table"},
                  {"add", table_to_json(R.odd.add)},
                  {"sharp", table_to_json(R.odd.sharp)},
                  {"localOne", R.odd.localOne}};
    doc["action"] = {{"kind", "table"},
                     {"left", table_to_json(R.action.left)},
                     {"right", table_to_json(R.action.right)}};
    return doc;
}

FiniteTriring load_triring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedTableError("parse error in '" + path + "': " + e.what());
    }
    try {
        return triring_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedTableError("schema error in '" + path + "': " + e.what());
    }
}

void save_triring(const FiniteTriring& R, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << triring_to_json(R).dump(1) << "\n";
}

FiniteTriring resolve_input(const std::string& builtinName, const std::string& path) {
    if (!builtinName.empty() && !path.empty())
        throw Error("give either a builtin name or a file, not both");
    if (!builtinName.empty()) return make_builtin(builtinName);
    if (!path.empty()) return load_triring(path);
    throw Error("no input: use --builtin NAME or a file argument");
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, int ideals, int spec, int ev, int od,
                   std::vector<Index> nilE, std::vector<Index> nilO, std::string why) {
        CorpusEntry e;
        e.name = std::move(name);
        e.triidealCount = ideals;
        e.spectrumSize = spec;
        e.evenPoints = ev;
        e.oddPoints = od;
        e.nilEven = std::move(nilE);
        e.nilOdd = std::move(nilO);
        e.provenance = std::move(why);
        out.push_back(std::move(e));
    };
    // Golden facts frozen from exhaustive enumeration over the carriers.
    add("TE(2,2)", 3, 2, 1, 1, {0}, {0}, "exhaustive enumeration, 4-element carrier");
    add("TE(4,4)", 6, 2, 1, 1, {0, 2}, {0, 2}, "exhaustive enumeration, 16-element carrier");
    add("TE(4,2)", 5, 2, 1, 1, {0, 2}, {0}, "exhaustive enumeration, 8-element carrier");
    add("TE(6,3)", 6, 3, 2, 1, {0}, {0}, "exhaustive enumeration, 18-element carrier");
    add("TE(8,4)", 9, 2, 1, 1, {0, 2, 4, 6}, {0, 2},
        "exhaustive enumeration, 32-element carrier");
    add("TQ-modp(3)", 3, 2, 1, 1, {0}, {0},
        "both parts are 9-element fields; only the trivial ideals survive");
    add("TE(4,1)", 3, 1, 1, 0, {0, 2}, {0}, "zero odd part over Z/4");
    add("TE(6,1)", 4, 2, 2, 0, {0}, {0}, "zero odd part over Z/6");
    {
        CorpusEntry e;
        e.name = "TQ-rational";
        e.finiteBackend = false;
        e.provenance = "exact element backend; spectrum operations are rejected";
        out.push_back(std::move(e));
    }
    return out;
}

void verify_entry(const CorpusEntry& e) {
    if (!e.finiteBackend) {
        if (!tq::validate_rational_triquaternions().ok())
            throw Error("rational triquaternion axioms failed");
        return;
    }
    FiniteTriring R = make_builtin(e.name);
    if (!validate_triring(R).ok()) throw Error(e.name + ": axiom validation failed");
    if (static_cast<int>(enumerate_triideals(R).size()) != e.triidealCount)
        throw Error(e.name + ": triideal count drifted");
    Trispectrum sp = trispectrum(R);
    if (static_cast<int>(sp.points.size()) != e.spectrumSize ||
        static_cast<int>(sp.evenPoints.size()) != e.evenPoints ||
        static_cast<int>(sp.oddPoints.size()) != e.oddPoints)
        throw Error(e.name + ": spectrum shape drifted");
    Triideal nil = trinilradical(R);
    if (nil.even != e.nilEven || nil.odd != e.nilOdd)
        throw Error(e.name + ": trinilradical drifted");
}

// ---------------------------------------------------------------------------
// Report schemas

json to_json(const Triideal& I) { return json{{"even", I.even}, {"odd", I.odd}}; }

Triideal triideal_from_json(const FiniteTriring& R, const json& j) {
    Triideal I;
    for (const auto& v : j.at("even")) I.even.push_back(v.get<Index>());
    for (const auto& v : j.at("odd")) I.odd.push_back(v.get<Index>());
    std::sort(I.even.begin(), I.even.end());
    std::sort(I.odd.begin(), I.odd.end());
    ValidationReport rep = validate_triideal(R, I);
    if (!rep.ok())
        throw HypothesisError("not a triideal: " + rep.first_failure()->axiom);
    return I;
}

json to_json(const ValidationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json j{{"axiom", c.axiom}, {"pass", c.pass}};
        if (!c.pass) j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    return json{{"ok", rep.ok()}, {"checks", std::move(checks)}};
}

json to_json(const FiniteTriring& R, const PrimalityResult& pr, const Triideal& P) {
    json j;
    j["prime"] = pr.prime;
    j["parity"] = prime_parity_even(R, P) ? "even" : "odd";
    if (pr.witness) {
        j["witness"] = {{"clause", pr.witness->clause},
                        {"x", pr.witness->x},
                        {"y", pr.witness->y}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json spectrum_report(const FiniteTriring& R) {
    Trispectrum sp = trispectrum(R);
    json points = json::array();
    for (const auto& p : sp.points)
        points.push_back(json{{"even", p.ideal.even},
                              {"odd", p.ideal.odd},
                              {"parity", p.even ? "even" : "odd"}});
    json closed = json::array();
    for (const auto& c : closed_sets(R, sp, enumerate_triideals(R)))
        closed.push_back(c.points);
    return json{{"ring", R.name},
                {"points", std::move(points)},
                {"topology", json{{"closedSets", std::move(closed)}}}};
}

json topology_report(const FiniteTriring& R) {
    Trispectrum sp = trispectrum(R);
    auto ideals = enumerate_triideals(R);
    auto closed = closed_sets(R, sp, ideals);
    json sets = json::array();
    for (const auto& c : closed) {
        json j;
        j["points"] = c.points;
        j["generator"] = to_json(c.generator);
        j["irreducible"] = is_irreducible(R, sp, closed, c.points);
        sets.push_back(std::move(j));
    }
    json edges = json::array();
    for (auto [p, q] : specialization_order(sp)) edges.push_back(json::array({p, q}));
    return json{{"ring", R.name},
                {"closedSets", std::move(sets)},
                {"specialization", std::move(edges)}};
}

json localization_report(const LocalizedTriring& L) {
    return json{{"classCount", L.classCount()},
                {"evenClasses", L.evenPart.classes},
                {"oddClasses", L.oddPart.classes},
                {"canonicalHomBijective", L.canonicalBijective}};
}

namespace {

std::string gen_label(BasicGen g) {
    return (g.odd ? "o" : "e") + std::to_string(g.x);
}

}  // namespace

json sheaf_report_json(const SheafReport& rep) {
    // group verdicts by target
    json targets = json::array();
    std::string cur;
    for (const auto& v : rep.verdicts) {
        std::string name = gen_label(v.target);
        if (targets.empty() || cur != name) {
            targets.push_back(json{{"generator", name}, {"covers", json::array()}});
            cur = name;
        }
        json members = json::array();
        for (BasicGen g : v.cover) members.push_back(gen_label(g));
        json c{{"members", std::move(members)},
               {"identityAxiom", v.identityAxiom},
               {"gluingAxiom", v.gluingAxiom}};
        if (!v.counterexample.empty()) c["counterexample"] = v.counterexample;
        targets.back()["covers"].push_back(std::move(c));
    }
    return json{{"targets", std::move(targets)}, {"allPass", rep.allPass()}};
}

json ideals_report(const FiniteTriring& R) {
    auto ideals = enumerate_triideals(R);
    json arr = json::array();
    for (const auto& I : ideals) {
        json j = to_json(I);
        j["prime"] = to_json(R, is_prime_by_definition(R, I), I);
        arr.push_back(std::move(j));
    }
    return json{{"ring", R.name}, {"count", ideals.size()}, {"triideals", std::move(arr)}};
}

// ---------------------------------------------------------------------------
// verify-all

namespace {

struct Verdict {
    std::string name;
    bool pass = true;
    std::string detail;
};

Verdict check_axioms(const FiniteTriring& R) {
    Verdict v{"axioms"};
    ValidationReport rep = validate_triring(R);
    v.pass = rep.ok();
    if (!v.pass)
        v.detail = rep.first_failure()->axiom + " [" + rep.first_failure()->witness + "]";
    return v;
}

Verdict check_arithmetic_identities(const FiniteTriring& R) {
    Verdict v{"arithmetic-identities"};
    const int n0 = R.evenSize(), n1 = R.oddSize();
    // (x a)#(y b) = (xy)(a#b) and (a x)#(b y) = (a#b)xy over the full carrier
    for (Index xe = 0; xe < n0 && v.pass; ++xe)
        for (Index xo = 0; xo < n1 && v.pass; ++xo)
            for (Index ye = 0; ye < n0 && v.pass; ++ye)
                for (Index yo = 0; yo < n1 && v.pass; ++yo) {
                    TriringElement x{xe, xo}, y{ye, yo};
                    TriringElement xy = mul(R, x, y);
                    for (Index a = 0; a < n1 && v.pass; ++a)
                        for (Index b = 0; b < n1; ++b) {
                            TriringElement oa{0, a}, ob{0, b};
                            TriringElement lhs =
                                sharp(R, mul(R, x, oa), mul(R, y, ob));
                            TriringElement rhs = mul(R, xy, sharp(R, oa, ob));
                            if (!(lhs == rhs)) {
                                v.pass = false;
                                v.detail = "left product identity";
                                break;
                            }
                            TriringElement lhs2 =
                                sharp(R, mul(R, oa, x), mul(R, ob, y));
                            TriringElement rhs2 = mul(R, sharp(R, oa, ob), xy);
                            if (!(lhs2 == rhs2)) {
                                v.pass = false;
                                v.detail = "right product identity";
                                break;
                            }
                        }
                }
    // (x a)^#m = x^m a^#m and (a x)^#m = a^#m x^m
    const int bound = std::max(n0, n1);
    for (Index xe = 0; xe < n0 && v.pass; ++xe)
        for (Index xo = 0; xo < n1 && v.pass; ++xo)
            for (Index a = 0; a < n1 && v.pass; ++a)
                for (int m = 1; m <= bound && v.pass; ++m) {
                    TriringElement x{xe, xo}, oa{0, a};
                    TriringElement xm = power(R, x, m);
                    TriringElement am{0, R.powSharp(a, m)};
                    TriringElement left{0, R.powSharp(mul(R, x, oa).o, m)};
                    if (!(left == mul(R, xm, am))) {
                        v.pass = false;
                        v.detail = "left power identity";
                    }
                    TriringElement right{0, R.powSharp(mul(R, oa, x).o, m)};
                    if (!(right == mul(R, am, xm))) {
                        v.pass = false;
                        v.detail = "right power identity";
                    }
                }
    // quotient and surjection correspondence for every triideal
    auto ideals = enumerate_triideals(R);
    for (const auto& I : ideals) {
        if (!v.pass) break;
        QuotientTriring q = quotient(R, I);
        if (!is_surjective(q.ring, q.natural)) {
            v.pass = false;
            v.detail = "natural map not surjective onto both parts";
            break;
        }
        int count = 0;
        for (const auto& J : ideals) {
            if (!ideal_subset(I, J)) continue;
            ++count;
            Triideal down = pushforward_triideal(R, q.ring, q.natural, J);
            if (!(pullback_triideal(R, q.ring, q.natural, down) == J)) {
                v.pass = false;
                v.detail = "pushforward/pullback do not invert each other";
                break;
            }
        }
        if (v.pass && count != static_cast<int>(enumerate_triideals(q.ring).size())) {
            v.pass = false;
            v.detail = "surjection correspondence is not a bijection";
        }
    }
    return v;
}

Verdict check_prime_criteria(const FiniteTriring& R) {
    Verdict v{"prime-criteria-agreement"};
    auto ideals = enumerate_triideals(R);
    for (const auto& P : ideals) {
        bool byDef = is_prime_by_definition(R, P).prime;
        bool byProd = is_prime_by_products(R, P, ideals);
        bool byComp = is_prime_by_components(R, P);
        if (byDef != byProd || byDef != byComp) {
            v.pass = false;
            v.detail = "criteria disagree on a triideal";
            break;
        }
    }
    return v;
}

Verdict check_radical_identities(const FiniteTriring& R) {
    Verdict v{"radical-identities"};
    auto ideals = enumerate_triideals(R);
    Trispectrum sp = trispectrum(R);
    Triideal nil = trinilradical(R);
    {
        Triideal meet = full_ideal(R);
        for (const auto& p : sp.points) meet = ideal_intersect(R, meet, p.ideal);
        if (!(meet == nil)) {
            v.pass = false;
            v.detail = "trinilradical differs from the intersection of primes";
            return v;
        }
    }
    for (const auto& I : ideals) {
        if (is_full_ideal(R, I)) continue;
        Triideal rad = radical(R, I);
        Triideal meet = full_ideal(R);
        for (const auto& p : sp.points)
            if (ideal_subset(I, p.ideal)) meet = ideal_intersect(R, meet, p.ideal);
        if (!(rad == meet)) {
            v.pass = false;
            v.detail = "radical differs from the intersection of covering primes";
            return v;
        }
        if (!(radical(R, rad) == rad)) {
            v.pass = false;
            v.detail = "radical is not idempotent";
            return v;
        }
        // radical through the quotient: nilradical upstairs pulls back
        QuotientTriring q = quotient(R, I);
        Triideal qnil = trinilradical(q.ring);
        if (!(pullback_triideal(R, q.ring, q.natural, qnil) == rad)) {
            v.pass = false;
            v.detail = "radical does not match the quotient trinilradical";
            return v;
        }
    }
    {
        QuotientTriring q = quotient(R, nil);
        if (!(trinilradical(q.ring) == zero_ideal())) {
            v.pass = false;
            v.detail = "quotient by the trinilradical is not reduced";
            return v;
        }
    }
    {
        // containment in the ordinary nilradical of the full ring
        auto ord = ordinary_nilradical(R);
        std::set<std::pair<Index, Index>> ordSet;
        for (const auto& x : ord) ordSet.insert({x.e, x.o});
        for (Index e : nil.even)
            for (Index o : nil.odd)
                if (!ordSet.count({e, o})) {
                    v.pass = false;
                    v.detail = "trinilradical leaves the ordinary nilradical";
                    return v;
                }
        // and the ordinary nilradical is nilrad(R0) (+) R1
        auto evenNil = part_nilradical(R.even.mul, R.evenSize(), R.even.one);
        std::set<Index> evenNilSet(evenNil.begin(), evenNil.end());
        for (Index e = 0; e < R.evenSize(); ++e)
            for (Index o = 0; o < R.oddSize(); ++o)
                if (ordSet.count({e, o}) != (evenNilSet.count(e) > 0)) {
                    v.pass = false;
                    v.detail = "ordinary nilradical is not nilrad(R0) + R1";
                    return v;
                }
    }
    for (const auto& I : ideals)
        for (const auto& J : ideals)
            if (!ideal_subset(mixed_product(R, I, J), ideal_intersect(R, I, J))) {
                v.pass = false;
                v.detail = "mixed product leaves the intersection";
                return v;
            }
    return v;
}

Verdict check_topology_identities(const FiniteTriring& R) {
    Verdict v{"topology-identities"};
    auto ideals = enumerate_triideals(R);
    Trispectrum sp = trispectrum(R);
    auto closed = closed_sets(R, sp, ideals);

    PointSet full = full_point_set(sp);
    if (!(vanishing_set(R, sp, zero_ideal()).points == full) ||
        !vanishing_set(R, sp, full_ideal(R)).points.empty()) {
        v.pass = false;
        v.detail = "extremal vanishing sets are wrong";
        return v;
    }
    for (const auto& I : ideals)
        for (const auto& J : ideals) {
            PointSet vi = vanishing_set(R, sp, I).points;
            PointSet vj = vanishing_set(R, sp, J).points;
            PointSet u = set_union(vi, vj);
            if (u != vanishing_set(R, sp, ideal_intersect(R, I, J)).points ||
                u != vanishing_set(R, sp, mixed_product(R, I, J)).points) {
                v.pass = false;
                v.detail = "union identity fails";
                return v;
            }
            bool contain = set_subset(vi, vj);
            bool radicals = ideal_subset(radical(R, J), radical(R, I));
            if (contain != radicals) {
                v.pass = false;
                v.detail = "containment/radical equivalence fails";
                return v;
            }
            if (vanishing_set(R, sp, I).points !=
                vanishing_set(R, sp, radical(R, I)).points) {
                v.pass = false;
                v.detail = "vanishing set of the radical differs";
                return v;
            }
        }
    // intersections of up to three vanishing sets against the ideal sum
    const int n = static_cast<int>(ideals.size());
    for (int i = 0; i < n && v.pass; ++i)
        for (int j = i; j < n && v.pass; ++j)
            for (int k = j; k < n; ++k) {
                PointSet meet = set_intersect(
                    set_intersect(vanishing_set(R, sp, ideals[i]).points,
                                  vanishing_set(R, sp, ideals[j]).points),
                    vanishing_set(R, sp, ideals[k]).points);
                Triideal sum =
                    ideal_sum(R, ideal_sum(R, ideals[i], ideals[j]), ideals[k]);
                if (meet != vanishing_set(R, sp, sum).points) {
                    v.pass = false;
                    v.detail = "intersection/sum identity fails";
                    break;
                }
            }
    if (!v.pass) return v;
    // basic opens generate: D(I) is the union of D(x) over members
    for (const auto& I : ideals) {
        PointSet open = open_of_ideal(R, sp, I).points;
        PointSet u;
        for (Index x : I.even) u = set_union(u, basic_open(R, sp, {false, x}).points);
        for (Index x : I.odd) u = set_union(u, basic_open(R, sp, {true, x}).points);
        if (u != open) {
            v.pass = false;
            v.detail = "basic opens fail to generate";
            return v;
        }
    }
    // topology axioms on the closed family, plus irreducibility agreement
    {
        std::set<PointSet> family;
        for (const auto& c : closed) family.insert(c.points);
        if (!family.count(PointSet{}) || !family.count(full)) {
            v.pass = false;
            v.detail = "closed family misses an extremal set";
            return v;
        }
        for (const auto& a : family)
            for (const auto& b : family)
                if (!family.count(set_union(a, b)) || !family.count(set_intersect(a, b))) {
                    v.pass = false;
                    v.detail = "closed family is not a topology";
                    return v;
                }
    }
    try {
        for (const auto& c : closed) is_irreducible(R, sp, closed, c.points);
    } catch (const Error& e) {
        v.pass = false;
        v.detail = e.what();
    }
    return v;
}

Verdict check_localization(const FiniteTriring& R) {
    Verdict v{"localization"};
    if (R.oddSize() <= 1) {
        // 1# = 0 forces 0 into any candidate subset, so no multiplicative
        // subsets exist and the fraction layer is vacuous here.
        v.detail = "no multiplicative subsets on a zero-odd-part carrier";
        return v;
    }
    Trispectrum sp = trispectrum(R);
    try {
        for (int pi : sp.oddPoints) {
            const Triideal& P = sp.points[pi].ideal;
            LocalizedTriring L = localize_at_prime(R, P);
            // universal property against the residue map: both quotient
            // parts are finite integral domains, so every complement member
            // inverts and the factoring is forced
            QuotientTriring q = quotient(R, P);
            FactorResult f = factor_through(L, R, q.ring, q.natural);
            TriringHomomorphism round = compose(f.hom, L.canonicalHom);
            if (round.evenMap != q.natural.evenMap || round.oddMap != q.natural.oddMap) {
                v.pass = false;
                v.detail = "factoring does not reproduce the residue map";
                return v;
            }
            // local behavior: a unique maximal proper triideal among those
            // missing the image of the complement
            std::vector<Triideal> candidates;
            for (const auto& J : enumerate_triideals(L.ring)) {
                if (is_full_ideal(L.ring, J)) continue;
                bool meets = false;
                for (Index s : L.subset.even)
                    if (ideal_contains(J, L.canonicalHom.evenMap[s], false)) meets = true;
                for (Index s : L.subset.odd)
                    if (ideal_contains(J, L.canonicalHom.oddMap[s], true)) meets = true;
                if (!meets) candidates.push_back(J);
            }
            int maximal = 0;
            for (const auto& A : candidates) {
                bool isMax = true;
                for (const auto& B : candidates)
                    if (!(A == B) && ideal_subset(A, B)) isMax = false;
                if (isMax) ++maximal;
            }
            if (maximal != 1) {
                v.pass = false;
                v.detail = "localization at a prime is not local";
                return v;
            }
        }
        // inverting exactly the units reproduces the ring
        MultiplicativeSubset units{part_units(R.even.mul, R.evenSize(), R.even.one),
                                   part_units(R.odd.sharp, R.oddSize(), R.odd.localOne)};
        if (validate_multiplicative_subset(R, units).ok()) {
            LocalizedTriring L = localize(R, units);
            if (!L.canonicalBijective) {
                v.pass = false;
                v.detail = "inverting units did not reproduce the ring";
                return v;
            }
            FactorResult f = factor_through(L, R, L.ring, L.canonicalHom);
            TriringHomomorphism id = identity_hom(L.ring);
            if (f.hom.evenMap != id.evenMap || f.hom.oddMap != id.oddMap) {
                v.pass = false;
                v.detail = "universal property at the cone tip is not the identity";
                return v;
            }
        }
        // Type 3 at every non-trinilpotent odd element
        for (Index f1 = 0; f1 < R.oddSize(); ++f1) {
            if (is_trinilpotent(R, {0, f1})) continue;
            localize_at_odd(R, f1);
        }
        // Type 2 at every even element with odd locus
        for (Index f0 = 0; f0 < R.evenSize(); ++f0) {
            if (set_intersect(basic_open(R, sp, {false, f0}).points, sp.oddPoints)
                    .empty())
                continue;
            localize_at_even(R, sp, f0);
        }
    } catch (const Error& e) {
        v.pass = false;
        v.detail = e.what();
    }
    return v;
}

Verdict check_presheaf(SheafContext& ctx) {
    Verdict v{"presheaf-laws"};
    try {
        ValidationReport rep = verify_presheaf_axioms(ctx);
        v.pass = rep.ok();
        if (!v.pass)
            v.detail = rep.first_failure()->axiom + " [" + rep.first_failure()->witness + "]";
    } catch (const Error& e) {
        v.pass = false;
        v.detail = e.what();
    }
    return v;
}

Verdict check_sheaf(SheafContext& ctx, int maxCoverSize, json& out) {
    Verdict v{"sheaf-axioms"};
    try {
        SheafReport rep = verify_sheaf_axioms(ctx, maxCoverSize);
        out = sheaf_report_json(rep);
        v.pass = rep.allPass();
        if (!v.pass) {
            for (const auto& verdict : rep.verdicts)
                if (!verdict.counterexample.empty()) {
                    v.detail = verdict.counterexample;
                    break;
                }
        }
    } catch (const Error& e) {
        v.pass = false;
        v.detail = e.what();
    }
    return v;
}

}  // namespace

json verify_all_report(const FiniteTriring& R, int maxCoverSize) {
    std::vector<Verdict> verdicts;
    verdicts.push_back(check_axioms(R));
    if (verdicts.back().pass) {
        verdicts.push_back(check_arithmetic_identities(R));
        verdicts.push_back(check_prime_criteria(R));
        verdicts.push_back(check_radical_identities(R));
        verdicts.push_back(check_topology_identities(R));
        verdicts.push_back(check_localization(R));
        SheafContext ctx = make_sheaf_context(R);
        verdicts.push_back(check_presheaf(ctx));
        json sheafDetail;
        verdicts.push_back(check_sheaf(ctx, maxCoverSize, sheafDetail));
    }
    json checks = json::array();
    bool all = true;
    for (const auto& v : verdicts) {
        json j{{"name", v.name}, {"pass", v.pass}};
        if (!v.detail.empty()) j["detail"] = v.detail;
        checks.push_back(std::move(j));
        all = all && v.pass;
    }
    return json{{"ring", R.name}, {"checks", std::move(checks)}, {"allPass", all}};
}

}  // namespace triring::corpus
