#include "triring/sheaf.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace triring {

namespace {

std::string gen_name(BasicGen g) {
    return (g.odd ? "o" : "e") + std::to_string(g.x);
}

FiniteTriring zero_triring(const std::string& name) {
    FiniteCommutativeRing even;
    even.size = 1;
    even.add = {{0}};
    even.mul = {{0}};
    even.one = 0;
    OddPartRing odd;
    odd.size = 1;
    odd.add = {{0}};
    odd.sharp = {{0}};
    odd.localOne = 0;
    BimoduleAction act;
    act.left = {{0}};
    act.right = {{0}};
    return make_triring(name, std::move(even), std::move(odd), std::move(act));
}

FiniteTriring product_triring(const FiniteTriring& A, const FiniteTriring& B,
                              const std::string& name) {
    const int e = A.evenSize() * B.evenSize();
    const int o = A.oddSize() * B.oddSize();
    auto encE = [&](Index a, Index b) { return a * B.evenSize() + b; };
    auto encO = [&](Index a, Index b) { return a * B.oddSize() + b; };

    FiniteCommutativeRing even;
    even.size = e;
    even.add.assign(e, std::vector<Index>(e));
    even.mul.assign(e, std::vector<Index>(e));
    OddPartRing odd;
    odd.size = o;
    odd.add.assign(o, std::vector<Index>(o));
    odd.sharp.assign(o, std::vector<Index>(o));
    BimoduleAction act;
    act.left.assign(e, std::vector<Index>(o));
    act.right.assign(o, std::vector<Index>(e));

    for (Index xa = 0; xa < A.evenSize(); ++xa)
        for (Index xb = 0; xb < B.evenSize(); ++xb) {
            Index x = encE(xa, xb);
            for (Index ya = 0; ya < A.evenSize(); ++ya)
                for (Index yb = 0; yb < B.evenSize(); ++yb) {
                    Index y = encE(ya, yb);
                    even.add[x][y] = encE(A.add0(xa, ya), B.add0(xb, yb));
                    even.mul[x][y] = encE(A.mul0(xa, ya), B.mul0(xb, yb));
                }
            for (Index aa = 0; aa < A.oddSize(); ++aa)
                for (Index ab = 0; ab < B.oddSize(); ++ab) {
                    Index a = encO(aa, ab);
                    act.left[x][a] = encO(A.actL(xa, aa), B.actL(xb, ab));
                    act.right[a][x] = encO(A.actR(aa, xa), B.actR(ab, xb));
                }
        }
    for (Index aa = 0; aa < A.oddSize(); ++aa)
        for (Index ab = 0; ab < B.oddSize(); ++ab) {
            Index a = encO(aa, ab);
            for (Index ba = 0; ba < A.oddSize(); ++ba)
                for (Index bb = 0; bb < B.oddSize(); ++bb) {
                    Index b = encO(ba, bb);
                    odd.add[a][b] = encO(A.add1(aa, ba), B.add1(ab, bb));
                    odd.sharp[a][b] = encO(A.sharp1(aa, ba), B.sharp1(ab, bb));
                }
        }
    even.one = encE(A.even.one, B.even.one);
    odd.localOne = encO(A.odd.localOne, B.odd.localOne);
    return make_triring(name, std::move(even), std::move(odd), std::move(act));
}

int subset_pos(const std::vector<Index>& subset, Index s) {
    auto it = std::lower_bound(subset.begin(), subset.end(), s);
    if (it == subset.end() || *it != s)
        throw Error("element " + std::to_string(s) + " left the multiplicative subset");
    return static_cast<int>(it - subset.begin());
}

}  // namespace

std::vector<BasicGen> all_gens(const FiniteTriring& R) {
    std::vector<BasicGen> gens;
    for (Index x = 0; x < R.evenSize(); ++x) gens.push_back({false, x});
    for (Index x = 0; x < R.oddSize(); ++x) gens.push_back({true, x});
    return gens;
}

SheafContext make_sheaf_context(const FiniteTriring& R) {
    SheafContext ctx;
    ctx.R = &R;
    ctx.sp = trispectrum(R);
    ctx.nil = trinilradical(R);
    ctx.triideals = enumerate_triideals(R);
    std::set<PointSet> opens;
    for (const auto& c : closed_sets(R, ctx.sp, ctx.triideals)) {
        PointSet open;
        for (int i = 0; i < static_cast<int>(ctx.sp.points.size()); ++i)
            if (!std::binary_search(c.points.begin(), c.points.end(), i))
                open.push_back(i);
        opens.insert(open);
    }
    ctx.opens.assign(opens.begin(), opens.end());
    return ctx;
}

// ---------------------------------------------------------------------------
// Section spaces

const SectionSpace& section_space(SheafContext& ctx, BasicGen g) {
    auto it = ctx.spaceCache.find(g);
    if (it != ctx.spaceCache.end()) return *it->second;

    const FiniteTriring& R = *ctx.R;
    auto s = std::make_shared<SectionSpace>();
    s->gen = g;
    s->points = basic_open(R, ctx.sp, g).points;

    if (ideal_contains(ctx.nil, g.x, g.odd)) {
        s->tag = SectionCase::Zero;
        if (!s->points.empty())
            throw Error("trinilpotent generator with nonempty basic open");
        s->ring = zero_triring("O(" + gen_name(g) + ")");
    } else if (g.odd) {
        s->tag = SectionCase::Odd;
        s->loc3 = std::make_shared<TypeThreeLocalization>(localize_at_odd(R, g.x));
        s->ring = s->loc3->loc.ring;
        s->ring.name = "O(" + gen_name(g) + ")";
    } else if (!set_intersect(s->points, ctx.sp.oddPoints).empty()) {
        s->tag = SectionCase::EvenWithOdd;
        s->loc2 = std::make_shared<TypeTwoLocalization>(localize_at_even(R, ctx.sp, g.x));
        Index h1 = R.actR(R.odd.localOne, g.x);
        s->loc3 = std::make_shared<TypeThreeLocalization>(localize_at_odd(R, h1));
        s->secondEven = s->loc3->loc.ring.evenSize();
        s->secondOdd = s->loc3->loc.ring.oddSize();
        s->ring = product_triring(s->loc2->loc.ring, s->loc3->loc.ring,
                                  "O(" + gen_name(g) + ")");
    } else {
        s->tag = SectionCase::EvenNoOdd;
        std::vector<Index> powers;
        {
            std::set<Index> set;
            Index p = R.even.one;
            set.insert(p);
            for (int n = 1; n <= R.evenSize(); ++n) {
                p = R.mul0(p, g.x);
                set.insert(p);
            }
            powers.assign(set.begin(), set.end());
        }
        s->evenLoc = std::make_shared<LocalizedPart>(
            localize_part(R.even.add, R.even.mul, R.evenSize(), R.even.one, powers));
        for (Index mem : s->evenLoc->subset) {
            Index p = R.even.one;
            int exp = -1;
            for (int n = 0; n <= R.evenSize(); ++n) {
                if (p == mem) {
                    exp = n;
                    break;
                }
                p = R.mul0(p, g.x);
            }
            s->evenLocExpOf.push_back(exp);
        }
        s->secondEven = R.evenSize();
        s->secondOdd = 1;

        // Pair of the ordinary localization with the plain even ring, odd
        // part zero.
        const int e = s->evenLoc->classes * R.evenSize();
        FiniteCommutativeRing even;
        even.size = e;
        even.add.assign(e, std::vector<Index>(e));
        even.mul.assign(e, std::vector<Index>(e));
        auto enc = [&](Index a, Index b) { return a * R.evenSize() + b; };
        for (Index la = 0; la < s->evenLoc->classes; ++la)
            for (Index ba = 0; ba < R.evenSize(); ++ba)
                for (Index lb = 0; lb < s->evenLoc->classes; ++lb)
                    for (Index bb = 0; bb < R.evenSize(); ++bb) {
                        even.add[enc(la, ba)][enc(lb, bb)] =
                            enc(s->evenLoc->add[la][lb], R.add0(ba, bb));
                        even.mul[enc(la, ba)][enc(lb, bb)] =
                            enc(s->evenLoc->mul[la][lb], R.mul0(ba, bb));
                    }
        even.one = enc(s->evenLoc->one, R.even.one);
        OddPartRing odd;
        odd.size = 1;
        odd.add = {{0}};
        odd.sharp = {{0}};
        odd.localOne = 0;
        BimoduleAction act;
        act.left.assign(e, std::vector<Index>(1, 0));
        act.right.assign(1, std::vector<Index>(e, 0));
        s->ring = make_triring("O(" + gen_name(g) + ")", std::move(even), std::move(odd),
                               std::move(act));
    }
    if (!validate_triring(s->ring).ok())
        throw Error("section space carrier fails the triring axioms");
    auto& slot = ctx.spaceCache[g];
    slot = std::move(s);
    return *slot;
}

// ---------------------------------------------------------------------------
// Witnesses

namespace {

bool witness_holds(const FiniteTriring& R, BasicGen f, BasicGen g,
                   const RestrictionWitness& w) {
    if (!f.odd && !g.odd) return R.pow0(g.x, w.exponent) == R.mul0(w.cofactor, f.x);
    if (!f.odd && g.odd) return R.powSharp(g.x, w.exponent) == R.actR(w.cofactor, f.x);
    if (f.odd && g.odd) return R.powSharp(g.x, w.exponent) == R.sharp1(w.cofactor, f.x);
    return false;
}

}  // namespace

std::vector<RestrictionWitness> all_witnesses(SheafContext& ctx, BasicGen f, BasicGen g) {
    const FiniteTriring& R = *ctx.R;
    if (f.odd && !g.odd)
        throw HypothesisError("no witness connects an even basic open below an odd one");
    const int expBound = g.odd ? R.oddSize() : R.evenSize();
    const int cofBound = g.odd ? R.oddSize() : R.evenSize();
    std::vector<RestrictionWitness> out;
    for (int e = 1; e <= expBound; ++e)
        for (Index c = 0; c < cofBound; ++c) {
            RestrictionWitness w{e, c};
            if (witness_holds(R, f, g, w)) out.push_back(w);
        }
    return out;
}

RestrictionWitness find_witness(SheafContext& ctx, BasicGen f, BasicGen g) {
    if (!set_subset(section_space(ctx, g).points, section_space(ctx, f).points))
        throw HypothesisError("witness needs containment of the basic opens");
    auto ws = all_witnesses(ctx, f, g);
    if (ws.empty())
        throw Error("no witness found despite basic-open containment");
    return ws.front();  // least exponent, then least cofactor
}

// ---------------------------------------------------------------------------
// Restriction maps

namespace {

// Representative decompositions used by the restriction formulas.
struct EvenFracRep {
    Index num = 0;
    int exp = 0;  // denominator = f^exp
};
struct OddCompanionRep {
    Index num = 0;
    Index z = 0;
    int m = 0;  // denominator = z * f^m
};
struct OddPowerRep {
    Index num = 0;
    int k = 0;  // denominator = h^(#k) for the space's odd generator h
};

// All decompositions f^n = s for n up to the cycle bound.
std::vector<int> exponents_of(const FiniteTriring& R, Index f, Index s) {
    std::vector<int> out;
    Index p = R.even.one;
    for (int n = 0; n <= R.evenSize(); ++n) {
        if (p == s) out.push_back(n);
        p = R.mul0(p, f);
    }
    return out;
}

std::vector<int> sharp_exponents_of(const FiniteTriring& R, Index h, Index s) {
    std::vector<int> out;
    Index p = R.odd.localOne;
    for (int k = 0; k <= R.oddSize(); ++k) {
        if (p == s) out.push_back(k);
        p = R.sharp1(p, h);
    }
    return out;
}

// Odd elements avoiding every odd prime of D#(f0) (the companion cofactors).
std::vector<Index> companion_cofactors(const SheafContext& ctx, Index f0) {
    const FiniteTriring& R = *ctx.R;
    BasicOpen D = basic_open(R, ctx.sp, {false, f0});
    PointSet oddPts = set_intersect(D.points, ctx.sp.oddPoints);
    std::vector<Index> zs;
    for (Index z = 0; z < R.oddSize(); ++z) {
        bool ok = true;
        for (int pi : oddPts)
            if (ideal_contains(ctx.sp.points[pi].ideal, z, true)) ok = false;
        if (ok) zs.push_back(z);
    }
    return zs;
}

std::vector<OddCompanionRep> companion_decomps(const SheafContext& ctx, Index f0,
                                               const std::vector<Index>& zs, Index s1,
                                               Index num) {
    const FiniteTriring& R = *ctx.R;
    std::vector<OddCompanionRep> out;
    for (int m = 0; m <= R.evenSize(); ++m) {
        Index fp = R.pow0(f0, m);
        for (Index z : zs)
            if (R.actR(z, fp) == s1) out.push_back({num, z, m});
    }
    return out;
}

}  // namespace

namespace {

// Builders for the target class of one source component under one witness
// and one representative decomposition. Each mirrors one displayed
// restriction formula.

Index target_even_frac(const FiniteTriring& R, const LocalizedPart& tgt, Index g,
                       const RestrictionWitness& w, const EvenFracRep& rep) {
    Index num = R.mul0(rep.num, R.pow0(w.cofactor, rep.exp));
    Index den = R.pow0(g, rep.exp * w.exponent);
    return tgt.classOf[num][subset_pos(tgt.subset, den)];
}

Index target_odd_companion(const FiniteTriring& R, const LocalizedPart& tgt, Index g,
                           const RestrictionWitness& w, const OddCompanionRep& rep) {
    Index num = R.actR(rep.num, R.pow0(w.cofactor, rep.m));
    Index den = R.actR(rep.z, R.pow0(g, rep.m * w.exponent));
    return tgt.classOf[num][subset_pos(tgt.subset, den)];
}

// Case 1(iii) second components: b1 / (1# f^k)  ->  b1 r0^k / (1# g^(ku)).
Index target_odd_power_even(const FiniteTriring& R, const LocalizedPart& tgt, Index g,
                            const RestrictionWitness& w, const OddPowerRep& rep) {
    Index num = R.actR(rep.num, R.pow0(w.cofactor, rep.k));
    Index den = R.actR(R.odd.localOne, R.pow0(g, rep.k * w.exponent));
    return tgt.classOf[num][subset_pos(tgt.subset, den)];
}

// Case 3: b1 / (1# f^k)  ->  (b1 # r1^(#k)) / g1^(#kv).
Index target_odd_to_type3(const FiniteTriring& R, const LocalizedPart& tgt, Index g1,
                          const RestrictionWitness& w, const OddPowerRep& rep) {
    Index num = R.sharp1(rep.num, R.powSharp(w.cofactor, rep.k));
    Index den = R.powSharp(g1, rep.k * w.exponent);
    return tgt.classOf[num][subset_pos(tgt.subset, den)];
}

// Case 4: b1 / f1^(#n)  ->  (b1 # t1^(#n)) / g1^(#(theta n)).
Index target_odd_type3_type3(const FiniteTriring& R, const LocalizedPart& tgt, Index g1,
                             const RestrictionWitness& w, const OddPowerRep& rep) {
    Index num = R.sharp1(rep.num, R.powSharp(w.cofactor, rep.k));
    Index den = R.powSharp(g1, rep.k * w.exponent);
    return tgt.classOf[num][subset_pos(tgt.subset, den)];
}

}  // namespace

const TriringHomomorphism& restriction(SheafContext& ctx, BasicGen f, BasicGen g) {
    auto key = std::make_pair(f, g);
    auto it = ctx.mapCache.find(key);
    if (it != ctx.mapCache.end()) return *it->second;

    const FiniteTriring& R = *ctx.R;
    const SectionSpace& F = section_space(ctx, f);
    const SectionSpace& G = section_space(ctx, g);
    if (!set_subset(G.points, F.points))
        throw HypothesisError("restriction needs containment of the basic opens");

    auto h = std::make_shared<TriringHomomorphism>();
    h->evenMap.assign(F.ring.evenSize(), 0);
    h->oddMap.assign(F.ring.oddSize(), 0);

    if (G.tag == SectionCase::Zero) {
        // zero homomorphism into the one-element space
    } else if (f.odd && !g.odd) {
        throw Error("even basic open below an odd one must be empty");
    } else if (F.tag == SectionCase::EvenNoOdd) {
        if (G.tag != SectionCase::EvenNoOdd)
            throw Error("no-odd source cannot restrict to a space with odd locus");
        RestrictionWitness w = find_witness(ctx, f, g);
        for (Index le = 0; le < F.evenLoc->classes; ++le) {
            auto [a0, s] = F.evenLoc->rep[le];
            EvenFracRep rep{a0, F.evenLocExpOf[subset_pos(F.evenLoc->subset, s)]};
            Index lt = target_even_frac(R, *G.evenLoc, g.x, w, rep);
            for (Index b0 = 0; b0 < R.evenSize(); ++b0)
                h->evenMap[F.encodeEven(le, b0)] = G.encodeEven(lt, b0);
        }
    } else if (F.tag == SectionCase::EvenWithOdd && G.tag == SectionCase::EvenNoOdd) {
        RestrictionWitness w = find_witness(ctx, f, g);
        const LocalizedPart& srcE = F.loc2->loc.evenPart;
        for (Index ue = 0; ue < srcE.classes; ++ue) {
            auto [a0, s] = srcE.rep[ue];
            EvenFracRep rep{a0, F.loc2->evenExpOf[subset_pos(srcE.subset, s)]};
            Index lt = target_even_frac(R, *G.evenLoc, g.x, w, rep);
            for (Index ve = 0; ve < F.secondEven; ++ve) {
                Index b0 = F.loc3->loc.evenPart.rep[ve].first;
                h->evenMap[F.encodeEven(ue, ve)] = G.encodeEven(lt, b0);
            }
        }
        // odd sections die: the target odd part is trivial
    } else if (F.tag == SectionCase::EvenWithOdd && G.tag == SectionCase::EvenWithOdd) {
        RestrictionWitness w = find_witness(ctx, f, g);
        const LocalizedPart& srcE2 = F.loc2->loc.evenPart;
        const LocalizedPart& srcO2 = F.loc2->loc.oddPart;
        const LocalizedPart& srcE3 = F.loc3->loc.evenPart;
        const LocalizedPart& srcO3 = F.loc3->loc.oddPart;
        std::vector<Index> ue2(srcE2.classes), uo2(srcO2.classes);
        std::vector<Index> ve3(srcE3.classes), vo3(srcO3.classes);
        for (Index c = 0; c < srcE2.classes; ++c) {
            auto [a0, s] = srcE2.rep[c];
            EvenFracRep rep{a0, F.loc2->evenExpOf[subset_pos(srcE2.subset, s)]};
            ue2[c] = target_even_frac(R, G.loc2->loc.evenPart, g.x, w, rep);
        }
        for (Index c = 0; c < srcO2.classes; ++c) {
            auto [a1, s1] = srcO2.rep[c];
            auto [z, m] = F.loc2->oddDecompOf[subset_pos(srcO2.subset, s1)];
            OddCompanionRep rep{a1, z, m};
            uo2[c] = target_odd_companion(R, G.loc2->loc.oddPart, g.x, w, rep);
        }
        for (Index c = 0; c < srcE3.classes; ++c)
            ve3[c] = G.loc3->loc.evenPart.canonical[srcE3.rep[c].first];
        for (Index c = 0; c < srcO3.classes; ++c) {
            auto [b1, t1] = srcO3.rep[c];
            OddPowerRep rep{b1, F.loc3->oddExpOf[subset_pos(srcO3.subset, t1)]};
            vo3[c] = target_odd_power_even(R, G.loc3->loc.oddPart, g.x, w, rep);
        }
        for (Index ue = 0; ue < srcE2.classes; ++ue)
            for (Index ve = 0; ve < F.secondEven; ++ve)
                h->evenMap[F.encodeEven(ue, ve)] = G.encodeEven(ue2[ue], ve3[ve]);
        for (Index uo = 0; uo < srcO2.classes; ++uo)
            for (Index vo = 0; vo < F.secondOdd; ++vo)
                h->oddMap[F.encodeOdd(uo, vo)] = G.encodeOdd(uo2[uo], vo3[vo]);
    } else if (F.tag == SectionCase::EvenWithOdd && G.tag == SectionCase::Odd) {
        RestrictionWitness w = find_witness(ctx, f, g);
        const LocalizedPart& srcE3 = F.loc3->loc.evenPart;
        const LocalizedPart& srcO3 = F.loc3->loc.oddPart;
        std::vector<Index> ve3(srcE3.classes), vo3(srcO3.classes);
        for (Index c = 0; c < srcE3.classes; ++c)
            ve3[c] = G.loc3->loc.evenPart.canonical[srcE3.rep[c].first];
        for (Index c = 0; c < srcO3.classes; ++c) {
            auto [b1, t1] = srcO3.rep[c];
            OddPowerRep rep{b1, F.loc3->oddExpOf[subset_pos(srcO3.subset, t1)]};
            vo3[c] = target_odd_to_type3(R, G.loc3->loc.oddPart, g.x, w, rep);
        }
        for (Index ue = 0; ue < F.loc2->loc.evenPart.classes; ++ue)
            for (Index ve = 0; ve < F.secondEven; ++ve)
                h->evenMap[F.encodeEven(ue, ve)] = ve3[ve];
        for (Index uo = 0; uo < F.loc2->loc.oddPart.classes; ++uo)
            for (Index vo = 0; vo < F.secondOdd; ++vo)
                h->oddMap[F.encodeOdd(uo, vo)] = vo3[vo];
    } else if (F.tag == SectionCase::Odd && G.tag == SectionCase::Odd) {
        RestrictionWitness w = find_witness(ctx, f, g);
        const LocalizedPart& srcE = F.loc3->loc.evenPart;
        const LocalizedPart& srcO = F.loc3->loc.oddPart;
        for (Index c = 0; c < srcE.classes; ++c)
            h->evenMap[c] = G.loc3->loc.evenPart.canonical[srcE.rep[c].first];
        for (Index c = 0; c < srcO.classes; ++c) {
            auto [b1, s1] = srcO.rep[c];
            OddPowerRep rep{b1, F.loc3->oddExpOf[subset_pos(srcO.subset, s1)]};
            h->oddMap[c] = target_odd_type3_type3(R, G.loc3->loc.oddPart, g.x, w, rep);
        }
    } else {
        throw Error("unreachable restriction case combination");
    }

    if (!is_homomorphism(F.ring, G.ring, *h))
        throw Error("restriction " + gen_name(f) + "->" + gen_name(g) +
                    " is not a triring homomorphism");

    // Witness and representative independence: every decomposition of every
    // source class under every witness must land in the same target class.
    if (G.tag != SectionCase::Zero && !(f.odd && !g.odd)) {
        auto witnesses = all_witnesses(ctx, f, g);
        auto checkEvenFrac = [&](const LocalizedPart& src, Index f0,
                                 const LocalizedPart& tgt,
                                 const std::function<Index(Index)>& expected) {
            for (Index a = 0; a < static_cast<Index>(src.classOf.size()); ++a)
                for (std::size_t si = 0; si < src.subset.size(); ++si) {
                    Index cls = src.classOf[a][si];
                    for (int n : exponents_of(R, f0, src.subset[si]))
                        for (const auto& w : witnesses)
                            if (target_even_frac(R, tgt, g.x, w, {a, n}) != expected(cls))
                                throw Error("even restriction depends on witness or representative");
                }
        };
        switch (F.tag) {
            case SectionCase::EvenNoOdd: {
                checkEvenFrac(*F.evenLoc, f.x, *G.evenLoc, [&](Index cls) {
                    return G.decodeEven(h->evenMap[F.encodeEven(cls, 0)]).first;
                });
                break;
            }
            case SectionCase::EvenWithOdd: {
                if (G.tag == SectionCase::EvenNoOdd) {
                    checkEvenFrac(F.loc2->loc.evenPart, f.x, *G.evenLoc, [&](Index cls) {
                        return G.decodeEven(h->evenMap[F.encodeEven(cls, 0)]).first;
                    });
                } else if (G.tag == SectionCase::EvenWithOdd) {
                    checkEvenFrac(F.loc2->loc.evenPart, f.x, G.loc2->loc.evenPart,
                                  [&](Index cls) {
                                      return G.decodeEven(h->evenMap[F.encodeEven(cls, 0)]).first;
                                  });
                    const LocalizedPart& srcO2 = F.loc2->loc.oddPart;
                    auto zs = companion_cofactors(ctx, f.x);
                    for (Index a = 0; a < static_cast<Index>(srcO2.classOf.size()); ++a)
                        for (std::size_t si = 0; si < srcO2.subset.size(); ++si) {
                            Index cls = srcO2.classOf[a][si];
                            Index want = G.decodeOdd(h->oddMap[F.encodeOdd(cls, 0)]).first;
                            for (const auto& rep :
                                 companion_decomps(ctx, f.x, zs, srcO2.subset[si], a))
                                for (const auto& w : witnesses)
                                    if (target_odd_companion(R, G.loc2->loc.oddPart, g.x, w,
                                                             rep) != want)
                                        throw Error("odd companion restriction depends on witness or representative");
                        }
                    const LocalizedPart& srcO3 = F.loc3->loc.oddPart;
                    for (Index a = 0; a < static_cast<Index>(srcO3.classOf.size()); ++a)
                        for (std::size_t si = 0; si < srcO3.subset.size(); ++si) {
                            Index cls = srcO3.classOf[a][si];
                            Index want = G.decodeOdd(h->oddMap[F.encodeOdd(0, cls)]).second;
                            for (int k : sharp_exponents_of(R, F.loc3->f1, srcO3.subset[si]))
                                for (const auto& w : witnesses)
                                    if (target_odd_power_even(R, G.loc3->loc.oddPart, g.x, w,
                                                              {a, k}) != want)
                                        throw Error("second-component restriction depends on witness or representative");
                        }
                } else {  // target Odd, Case 3
                    const LocalizedPart& srcO3 = F.loc3->loc.oddPart;
                    for (Index a = 0; a < static_cast<Index>(srcO3.classOf.size()); ++a)
                        for (std::size_t si = 0; si < srcO3.subset.size(); ++si) {
                            Index cls = srcO3.classOf[a][si];
                            Index want = h->oddMap[F.encodeOdd(0, cls)];
                            for (int k : sharp_exponents_of(R, F.loc3->f1, srcO3.subset[si]))
                                for (const auto& w : witnesses)
                                    if (target_odd_to_type3(R, G.loc3->loc.oddPart, g.x, w,
                                                            {a, k}) != want)
                                        throw Error("odd restriction depends on witness or representative");
                        }
                }
                break;
            }
            case SectionCase::Odd: {
                const LocalizedPart& srcO = F.loc3->loc.oddPart;
                for (Index a = 0; a < static_cast<Index>(srcO.classOf.size()); ++a)
                    for (std::size_t si = 0; si < srcO.subset.size(); ++si) {
                        Index cls = srcO.classOf[a][si];
                        Index want = h->oddMap[cls];
                        for (int k : sharp_exponents_of(R, f.x, srcO.subset[si]))
                            for (const auto& w : witnesses)
                                if (target_odd_type3_type3(R, G.loc3->loc.oddPart, g.x, w,
                                                           {a, k}) != want)
                                    throw Error("odd restriction depends on witness or representative");
                    }
                break;
            }
            case SectionCase::Zero:
                break;
        }
    }

    auto& slot = ctx.mapCache[key];
    slot = std::move(h);
    return *slot;
}

// ---------------------------------------------------------------------------
// Inverse limits

int InverseLimit::slotOf(BasicGen g) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == g) return static_cast<int>(i);
    return -1;
}

TriringHomomorphism InverseLimit::projection(const SheafContext& ctx, int slot) const {
    (void)ctx;
    TriringHomomorphism p;
    p.evenMap.reserve(evenTuples.size());
    p.oddMap.reserve(oddTuples.size());
    for (const auto& t : evenTuples) p.evenMap.push_back(t[slot]);
    for (const auto& t : oddTuples) p.oddMap.push_back(t[slot]);
    return p;
}

namespace {

// Compatible tuples of one parity across the slot spaces: values forced down
// the containment order, free choices only at slots not dominated by an
// earlier one, then the definitional compatibility filter.
std::vector<std::vector<Index>> compatible_tuples(
    SheafContext& ctx, const std::vector<BasicGen>& gens,
    const std::vector<PointSet>& pts, bool oddPart) {
    const int k = static_cast<int>(gens.size());
    std::vector<int> sizes(k);
    for (int i = 0; i < k; ++i) {
        const auto& ring = section_space(ctx, gens[i]).ring;
        sizes[i] = oddPart ? ring.oddSize() : ring.evenSize();
    }
    auto mapsTo = [&](int i, int j, Index v) {
        const TriringHomomorphism& r = restriction(ctx, gens[i], gens[j]);
        return oddPart ? r.oddMap[v] : r.evenMap[v];
    };

    std::vector<std::vector<Index>> out;
    std::vector<Index> cur(k, -1);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        Index forced = -1;
        bool consistent = true;
        for (int j = 0; j < i; ++j) {
            if (!set_subset(pts[i], pts[j])) continue;
            Index v = mapsTo(j, i, cur[j]);
            if (forced == -1)
                forced = v;
            else if (forced != v)
                consistent = false;
        }
        if (!consistent) return;
        if (forced != -1) {
            cur[i] = forced;
            rec(i + 1);
            cur[i] = -1;
            return;
        }
        for (Index v = 0; v < sizes[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = -1;
    };
    rec(0);

    std::vector<std::vector<Index>> filtered;
    for (const auto& t : out) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = 0; j < k && ok; ++j) {
                if (i == j || !set_subset(pts[j], pts[i])) continue;
                if (mapsTo(i, j, t[i]) != t[j]) ok = false;
            }
        if (ok) filtered.push_back(t);
    }
    std::sort(filtered.begin(), filtered.end());
    return filtered;
}

}  // namespace

InverseLimit inverse_limit(SheafContext& ctx, const PointSet& U) {
    InverseLimit L;
    L.open = U;
    for (BasicGen g : all_gens(*ctx.R)) {
        const SectionSpace& s = section_space(ctx, g);
        if (!s.points.empty() && set_subset(s.points, U)) L.gens.push_back(g);
    }
    // Larger basic opens first so the forcing pass sees dominators early.
    std::stable_sort(L.gens.begin(), L.gens.end(), [&](BasicGen a, BasicGen b) {
        return section_space(ctx, a).points.size() > section_space(ctx, b).points.size();
    });
    std::vector<PointSet> pts;
    for (BasicGen g : L.gens) pts.push_back(section_space(ctx, g).points);

    L.evenTuples = compatible_tuples(ctx, L.gens, pts, false);
    L.oddTuples = compatible_tuples(ctx, L.gens, pts, true);
    if (L.evenTuples.empty() || L.oddTuples.empty())
        throw Error("inverse limit lost its zero tuple");

    const int k = static_cast<int>(L.gens.size());
    const int e = static_cast<int>(L.evenTuples.size());
    const int o = static_cast<int>(L.oddTuples.size());
    std::map<std::vector<Index>, Index> evenIdx, oddIdx;
    for (int i = 0; i < e; ++i) evenIdx[L.evenTuples[i]] = i;
    for (int i = 0; i < o; ++i) oddIdx[L.oddTuples[i]] = i;

    auto locate = [](std::map<std::vector<Index>, Index>& m, const std::vector<Index>& t) {
        auto it = m.find(t);
        if (it == m.end()) throw Error("componentwise operation left the inverse limit");
        return it->second;
    };
    std::vector<const FiniteTriring*> rings;
    for (BasicGen g : L.gens) rings.push_back(&section_space(ctx, g).ring);

    FiniteCommutativeRing even;
    even.size = e;
    even.add.assign(e, std::vector<Index>(e));
    even.mul.assign(e, std::vector<Index>(e));
    OddPartRing odd;
    odd.size = o;
    odd.add.assign(o, std::vector<Index>(o));
    odd.sharp.assign(o, std::vector<Index>(o));
    BimoduleAction act;
    act.left.assign(e, std::vector<Index>(o));
    act.right.assign(o, std::vector<Index>(e));

    std::vector<Index> tmp(k);
    for (int a = 0; a < e; ++a)
        for (int b = 0; b < e; ++b) {
            for (int i = 0; i < k; ++i)
                tmp[i] = rings[i]->add0(L.evenTuples[a][i], L.evenTuples[b][i]);
            even.add[a][b] = locate(evenIdx, tmp);
            for (int i = 0; i < k; ++i)
                tmp[i] = rings[i]->mul0(L.evenTuples[a][i], L.evenTuples[b][i]);
            even.mul[a][b] = locate(evenIdx, tmp);
        }
    for (int a = 0; a < o; ++a)
        for (int b = 0; b < o; ++b) {
            for (int i = 0; i < k; ++i)
                tmp[i] = rings[i]->add1(L.oddTuples[a][i], L.oddTuples[b][i]);
            odd.add[a][b] = locate(oddIdx, tmp);
            for (int i = 0; i < k; ++i)
                tmp[i] = rings[i]->sharp1(L.oddTuples[a][i], L.oddTuples[b][i]);
            odd.sharp[a][b] = locate(oddIdx, tmp);
        }
    for (int a = 0; a < e; ++a)
        for (int b = 0; b < o; ++b) {
            for (int i = 0; i < k; ++i)
                tmp[i] = rings[i]->actL(L.evenTuples[a][i], L.oddTuples[b][i]);
            act.left[a][b] = locate(oddIdx, tmp);
            for (int i = 0; i < k; ++i)
                tmp[i] = rings[i]->actR(L.oddTuples[b][i], L.evenTuples[a][i]);
            act.right[b][a] = locate(oddIdx, tmp);
        }
    for (int i = 0; i < k; ++i) tmp[i] = rings[i]->even.one;
    even.one = locate(evenIdx, tmp);
    for (int i = 0; i < k; ++i) tmp[i] = rings[i]->odd.localOne;
    odd.localOne = locate(oddIdx, tmp);

    std::ostringstream name;
    name << "O(U";
    for (int p : U) name << "_" << p;
    name << ")";
    L.ring = make_triring(name.str(), std::move(even), std::move(odd), std::move(act));
    if (!validate_triring(L.ring).ok())
        throw Error("inverse limit fails the triring axioms");
    return L;
}

TriringHomomorphism open_restriction(SheafContext& ctx, const InverseLimit& U,
                                     const InverseLimit& V) {
    (void)ctx;
    if (!set_subset(V.open, U.open))
        throw HypothesisError("open restriction needs nested opens");
    std::vector<int> slots;
    for (BasicGen g : V.gens) {
        int s = U.slotOf(g);
        if (s < 0) throw Error("basic open of the smaller open is missing above");
        slots.push_back(s);
    }
    std::map<std::vector<Index>, Index> evenIdx, oddIdx;
    for (std::size_t i = 0; i < V.evenTuples.size(); ++i)
        evenIdx[V.evenTuples[i]] = static_cast<Index>(i);
    for (std::size_t i = 0; i < V.oddTuples.size(); ++i)
        oddIdx[V.oddTuples[i]] = static_cast<Index>(i);

    TriringHomomorphism h;
    std::vector<Index> sub(V.gens.size());
    for (const auto& t : U.evenTuples) {
        for (std::size_t i = 0; i < slots.size(); ++i) sub[i] = t[slots[i]];
        auto it = evenIdx.find(sub);
        if (it == evenIdx.end()) throw Error("subtuple is not compatible below");
        h.evenMap.push_back(it->second);
    }
    for (const auto& t : U.oddTuples) {
        for (std::size_t i = 0; i < slots.size(); ++i) sub[i] = t[slots[i]];
        auto it = oddIdx.find(sub);
        if (it == oddIdx.end()) throw Error("subtuple is not compatible below");
        h.oddMap.push_back(it->second);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Presheaf axiom suite

ValidationReport verify_presheaf_axioms(SheafContext& ctx) {
    const FiniteTriring& R = *ctx.R;
    ValidationReport rep;
    std::vector<BasicGen> gens = all_gens(R);

    {
        AxiomCheck c{"restriction-maps-valid"};
        try {
            for (BasicGen f : gens)
                for (BasicGen g : gens) {
                    if (!set_subset(section_space(ctx, g).points,
                                    section_space(ctx, f).points))
                        continue;
                    restriction(ctx, f, g);
                }
        } catch (const Error& e) {
            c.pass = false;
            c.witness = e.what();
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"restriction-identity"};
        for (BasicGen f : gens) {
            const TriringHomomorphism& r = restriction(ctx, f, f);
            const TriringHomomorphism id = identity_hom(section_space(ctx, f).ring);
            if (r.evenMap != id.evenMap || r.oddMap != id.oddMap) {
                c.pass = false;
                c.witness = gen_name(f);
                break;
            }
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"restriction-composition"};
        for (BasicGen f : gens) {
            const PointSet& pf = section_space(ctx, f).points;
            for (BasicGen g : gens) {
                const PointSet& pg = section_space(ctx, g).points;
                if (!set_subset(pg, pf)) continue;
                for (BasicGen h : gens) {
                    const PointSet& ph = section_space(ctx, h).points;
                    if (!set_subset(ph, pg)) continue;
                    TriringHomomorphism lhs =
                        compose(restriction(ctx, g, h), restriction(ctx, f, g));
                    const TriringHomomorphism& rhs = restriction(ctx, f, h);
                    if (lhs.evenMap != rhs.evenMap || lhs.oddMap != rhs.oddMap) {
                        c.pass = false;
                        c.witness = gen_name(f) + ">=" + gen_name(g) + ">=" + gen_name(h);
                    }
                }
            }
            if (!c.pass) break;
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"odd-below-even-nilpotence"};
        for (BasicGen f : gens) {
            if (!f.odd) continue;
            for (BasicGen g : gens) {
                if (g.odd) continue;
                if (set_subset(section_space(ctx, g).points, section_space(ctx, f).points) &&
                    !ideal_contains(ctx.nil, g.x, false)) {
                    c.pass = false;
                    c.witness = gen_name(g) + " below " + gen_name(f);
                }
            }
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"empty-odd-locus-criterion"};
        for (Index g0 = 0; g0 < R.evenSize(); ++g0) {
            PointSet pts = basic_open(R, ctx.sp, {false, g0}).points;
            bool emptyOdd = set_intersect(pts, ctx.sp.oddPoints).empty();
            bool algebraic = false;
            for (int b = 0; b <= R.evenSize() && !algebraic; ++b)
                if (R.actR(R.odd.localOne, R.pow0(g0, b)) == 0) algebraic = true;
            if (emptyOdd != algebraic) {
                c.pass = false;
                c.witness = "e" + std::to_string(g0);
            }
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"zero-space-normalization"};
        for (BasicGen f : gens) {
            if (!ideal_contains(ctx.nil, f.x, f.odd)) continue;
            const SectionSpace& s = section_space(ctx, f);
            if (s.tag != SectionCase::Zero || s.ring.carrierSize() != 1) {
                c.pass = false;
                c.witness = gen_name(f);
            }
        }
        rep.checks.push_back(c);
    }

    // Inverse limits over every open of the topology.
    try {
        std::vector<InverseLimit> limits;
        for (const PointSet& U : ctx.opens) limits.push_back(inverse_limit(ctx, U));
        {
            AxiomCheck c{"limit-projections-are-homs"};
            for (const auto& L : limits)
                for (std::size_t i = 0; i < L.gens.size() && c.pass; ++i) {
                    TriringHomomorphism p = L.projection(ctx, static_cast<int>(i));
                    if (!is_homomorphism(L.ring, section_space(ctx, L.gens[i]).ring, p)) {
                        c.pass = false;
                        c.witness = gen_name(L.gens[i]);
                    }
                }
            rep.checks.push_back(c);
        }
        {
            AxiomCheck c{"limit-projection-compatibility"};
            for (const auto& L : limits)
                for (std::size_t i = 0; i < L.gens.size() && c.pass; ++i)
                    for (std::size_t j = 0; j < L.gens.size() && c.pass; ++j) {
                        if (i == j) continue;
                        const auto& pi = section_space(ctx, L.gens[i]).points;
                        const auto& pj = section_space(ctx, L.gens[j]).points;
                        if (!set_subset(pj, pi)) continue;
                        TriringHomomorphism lhs =
                            compose(restriction(ctx, L.gens[i], L.gens[j]),
                                    L.projection(ctx, static_cast<int>(i)));
                        TriringHomomorphism rhs = L.projection(ctx, static_cast<int>(j));
                        if (lhs.evenMap != rhs.evenMap || lhs.oddMap != rhs.oddMap) {
                            c.pass = false;
                            c.witness = gen_name(L.gens[i]) + ">=" + gen_name(L.gens[j]);
                        }
                    }
            rep.checks.push_back(c);
        }
        {
            AxiomCheck c{"open-restriction-laws"};
            for (std::size_t u = 0; u < limits.size() && c.pass; ++u) {
                TriringHomomorphism idr = open_restriction(ctx, limits[u], limits[u]);
                TriringHomomorphism id = identity_hom(limits[u].ring);
                if (idr.evenMap != id.evenMap || idr.oddMap != id.oddMap) {
                    c.pass = false;
                    c.witness = "identity";
                    break;
                }
                for (std::size_t v = 0; v < limits.size() && c.pass; ++v) {
                    if (!set_subset(limits[v].open, limits[u].open) || v == u) continue;
                    TriringHomomorphism uv = open_restriction(ctx, limits[u], limits[v]);
                    // projections factor through the induced map
                    for (std::size_t i = 0; i < limits[v].gens.size(); ++i) {
                        TriringHomomorphism lhs = compose(
                            limits[v].projection(ctx, static_cast<int>(i)), uv);
                        int slot = limits[u].slotOf(limits[v].gens[i]);
                        TriringHomomorphism rhs = limits[u].projection(ctx, slot);
                        if (lhs.evenMap != rhs.evenMap || lhs.oddMap != rhs.oddMap) {
                            c.pass = false;
                            c.witness = "projection-factorization";
                        }
                    }
                    for (std::size_t w = 0; w < limits.size() && c.pass; ++w) {
                        if (!set_subset(limits[w].open, limits[v].open)) continue;
                        TriringHomomorphism vw = open_restriction(ctx, limits[v], limits[w]);
                        TriringHomomorphism uw = open_restriction(ctx, limits[u], limits[w]);
                        TriringHomomorphism comp = compose(vw, uv);
                        if (comp.evenMap != uw.evenMap || comp.oddMap != uw.oddMap) {
                            c.pass = false;
                            c.witness = "composition";
                        }
                    }
                }
            }
            rep.checks.push_back(c);
        }
        {
            AxiomCheck c{"limit-of-basic-open-matches-section-space"};
            for (BasicGen f : all_gens(R)) {
                const SectionSpace& s = section_space(ctx, f);
                if (s.points.empty()) continue;
                InverseLimit L = inverse_limit(ctx, s.points);
                int slot = L.slotOf(f);
                TriringHomomorphism p = L.projection(ctx, slot);
                if (!is_bijective(L.ring, s.ring, p)) {
                    c.pass = false;
                    c.witness = gen_name(f);
                    break;
                }
            }
            rep.checks.push_back(c);
        }
    } catch (const Error& e) {
        rep.checks.push_back({"inverse-limit-construction", false, e.what()});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Sheaf axiom suite

BasicGen gen_product(const FiniteTriring& R, BasicGen a, BasicGen b) {
    if (!a.odd && !b.odd) return {false, R.mul0(a.x, b.x)};
    if (!a.odd && b.odd) return {true, R.actL(a.x, b.x)};
    if (a.odd && !b.odd) return {true, R.actR(a.x, b.x)};
    return {true, R.sharp1(a.x, b.x)};
}

bool SheafReport::allPass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const CoverVerdict& v) {
        return v.identityAxiom && v.gluingAxiom;
    });
}

namespace {

std::string family_string(const std::vector<BasicGen>& cover,
                          const std::vector<Index>& evens, const std::vector<Index>& odds) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (i) os << ", ";
        os << gen_name(cover[i]) << ":(" << evens[i] << "," << odds[i] << ")";
    }
    return os.str();
}

// Compatible per-parity tuples across the cover, constrained on pairwise
// intersections.
std::vector<std::vector<Index>> cover_compatible(SheafContext& ctx,
                                                 const std::vector<BasicGen>& cover,
                                                 const std::vector<BasicGen>& meets,
                                                 bool oddPart) {
    const int k = static_cast<int>(cover.size());
    std::vector<int> sizes(k);
    for (int i = 0; i < k; ++i) {
        const auto& ring = section_space(ctx, cover[i]).ring;
        sizes[i] = oddPart ? ring.oddSize() : ring.evenSize();
    }
    auto meet = [&](int i, int j) { return meets[i * k + j]; };
    auto restrictTo = [&](int i, BasicGen h, Index v) {
        const TriringHomomorphism& r = restriction(ctx, cover[i], h);
        return oddPart ? r.oddMap[v] : r.evenMap[v];
    };
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur(k, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (Index v = 0; v < sizes[i]; ++v) {
            cur[i] = v;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                BasicGen h = meet(j, i);
                if (restrictTo(j, h, cur[j]) != restrictTo(i, h, v)) ok = false;
            }
            if (ok) rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

CoverVerdict check_cover(SheafContext& ctx, BasicGen f, const std::vector<BasicGen>& cover) {
    const FiniteTriring& R = *ctx.R;
    CoverVerdict v;
    v.target = f;
    v.cover = cover;
    const SectionSpace& F = section_space(ctx, f);

    PointSet covered;
    for (BasicGen g : cover) {
        const SectionSpace& G = section_space(ctx, g);
        if (!set_subset(G.points, F.points))
            throw CoverError("cover member outside the target basic open");
        covered = set_union(covered, G.points);
    }
    if (covered != F.points) {
        int missing = -1;
        for (int p : F.points)
            if (!std::binary_search(covered.begin(), covered.end(), p)) missing = p;
        throw CoverError("family does not cover, point " + std::to_string(missing) +
                         " uncovered");
    }

    const int k = static_cast<int>(cover.size());

    // Canonical generators of the pairwise intersections; their basic opens
    // must agree with the point-set intersections.
    std::vector<BasicGen> meets(k * k, BasicGen{});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            BasicGen h = gen_product(R, cover[i], cover[j]);
            PointSet expect = set_intersect(section_space(ctx, cover[i]).points,
                                            section_space(ctx, cover[j]).points);
            if (section_space(ctx, h).points != expect)
                throw Error("product generator does not cut out the intersection");
            meets[i * k + j] = h;
        }

    // Axiom (i): joint kernel of the restrictions must be trivial.
    std::vector<Index> evenKernel, oddKernel;
    for (Index e = 0; e < F.ring.evenSize(); ++e) {
        bool allZero = true;
        for (int i = 0; i < k && allZero; ++i)
            if (restriction(ctx, f, cover[i]).evenMap[e] != 0) allZero = false;
        if (allZero) evenKernel.push_back(e);
    }
    for (Index o = 0; o < F.ring.oddSize(); ++o) {
        bool allZero = true;
        for (int i = 0; i < k && allZero; ++i)
            if (restriction(ctx, f, cover[i]).oddMap[o] != 0) allZero = false;
        if (allZero) oddKernel.push_back(o);
    }
    if (evenKernel.size() != 1 || oddKernel.size() != 1) {
        v.identityAxiom = false;
        Index e = evenKernel.size() > 1 ? evenKernel[1] : evenKernel[0];
        Index o = oddKernel.size() > 1 ? oddKernel[1] : oddKernel[0];
        std::ostringstream os;
        os << "nonzero section (" << e << "," << o
           << ") of O(" << gen_name(f) << ") restricts to zero on every member";
        v.counterexample = os.str();
    }

    // Axiom (ii): every compatible family must arise from a global section.
    auto compatEven = cover_compatible(ctx, cover, meets, false);
    auto compatOdd = cover_compatible(ctx, cover, meets, true);

    std::set<std::vector<Index>> imageEven, imageOdd;
    for (Index e = 0; e < F.ring.evenSize(); ++e) {
        std::vector<Index> t(k);
        for (int i = 0; i < k; ++i) t[i] = restriction(ctx, f, cover[i]).evenMap[e];
        imageEven.insert(std::move(t));
    }
    for (Index o = 0; o < F.ring.oddSize(); ++o) {
        std::vector<Index> t(k);
        for (int i = 0; i < k; ++i) t[i] = restriction(ctx, f, cover[i]).oddMap[o];
        imageOdd.insert(std::move(t));
    }
    // Both compatibility lists are generated in lexicographic order.
    for (const auto& t : imageEven)
        if (!std::binary_search(compatEven.begin(), compatEven.end(), t))
            throw Error("restriction image is not compatible; composition law broken");
    for (const auto& t : imageOdd)
        if (!std::binary_search(compatOdd.begin(), compatOdd.end(), t))
            throw Error("restriction image is not compatible; composition law broken");

    std::vector<Index>* badEven = nullptr;
    std::vector<Index>* badOdd = nullptr;
    for (auto& t : compatEven)
        if (!imageEven.count(t)) {
            badEven = &t;
            break;
        }
    for (auto& t : compatOdd)
        if (!imageOdd.count(t)) {
            badOdd = &t;
            break;
        }
    if (badEven || badOdd) {
        v.gluingAxiom = false;
        std::vector<Index> evens = badEven ? *badEven : compatEven.front();
        std::vector<Index> odds = badOdd ? *badOdd : compatOdd.front();
        std::ostringstream os;
        os << "compatible family with no global section: "
           << family_string(cover, evens, odds)
           << " (candidates " << compatEven.size() << "x" << compatOdd.size()
           << ", glued " << imageEven.size() << "x" << imageOdd.size() << ")";
        v.counterexample = os.str();
    }
    return v;
}

SheafReport verify_sheaf_axioms(SheafContext& ctx, int maxCoverSize) {
    const FiniteTriring& R = *ctx.R;
    SheafReport report;

    // Distinct nonempty basic point sets with their canonical generators.
    std::map<PointSet, BasicGen> canonical;
    for (BasicGen g : all_gens(R)) {
        const PointSet& p = section_space(ctx, g).points;
        if (!p.empty()) canonical.emplace(p, g);
    }

    for (BasicGen f : all_gens(R)) {
        const SectionSpace& F = section_space(ctx, f);
        if (F.points.empty()) {
            // Only the empty family covers the empty open.
            report.verdicts.push_back(check_cover(ctx, f, {}));
            continue;
        }
        std::vector<std::pair<PointSet, BasicGen>> candidates;
        for (const auto& [pts, g] : canonical)
            if (set_subset(pts, F.points)) candidates.push_back({pts, g});

        const int n = static_cast<int>(candidates.size());
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int start) {
            if (!pick.empty()) {
                PointSet u;
                for (int i : pick) u = set_union(u, candidates[i].first);
                if (u == F.points) {
                    bool irredundant = true;
                    for (std::size_t d = 0; d < pick.size() && irredundant; ++d) {
                        PointSet rest;
                        for (std::size_t e = 0; e < pick.size(); ++e)
                            if (e != d) rest = set_union(rest, candidates[pick[e]].first);
                        if (set_subset(candidates[pick[d]].first, rest)) irredundant = false;
                    }
                    if (irredundant) {
                        std::vector<BasicGen> cover;
                        for (int i : pick) cover.push_back(candidates[i].second);
                        report.verdicts.push_back(check_cover(ctx, f, cover));
                    }
                }
            }
            if (static_cast<int>(pick.size()) == maxCoverSize) return;
            for (int i = start; i < n; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }
    return report;
}

}  // namespace triring
