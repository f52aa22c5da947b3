#include "fixtures.hpp"

#include "vcsp/certificate.hpp"
#include "vcsp/classify.hpp"
#include "vcsp/error.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

using namespace vcsp;
using namespace vcsp::testing;
using nlohmann::json;

TEST(Classify, SubmodularIsTractableWithMinMax) {
    Verdict v = classify(submodular_lang());
    ASSERT_EQ(v.kind, VerdictKind::Tractable);
    ASSERT_TRUE(v.tractable);
    EXPECT_EQ(v.tractable->m_set, all_pairs(2));
    EXPECT_EQ(v.tractable->stp, (OpPair{ops::min(2), ops::max(2)}));
    EXPECT_TRUE(verify_mjn(v.tractable->triple, submodular_lang(), v.tractable->m_set).holds);
    EXPECT_FALSE(v.trace.empty());
}

TEST(Classify, DisequalityIsTractableWithEmptyPairSet) {
    Verdict v = classify(disequality_lang());
    ASSERT_EQ(v.kind, VerdictKind::Tractable);
    EXPECT_TRUE(v.tractable->m_set.empty());
    EXPECT_EQ(v.tractable->triple, (OpTriple{ops::majority(2), ops::majority(2), ops::parity(2)}));
    EXPECT_TRUE(v.closure_saturated);
}

TEST(Classify, CutHasASoftSelfLoop) {
    ClassifyBudgets b;
    b.closure.rounds = 1;
    Verdict v = classify(cut_lang(), b);
    ASSERT_EQ(v.kind, VerdictKind::NPHard);
    EXPECT_EQ(v.reason, HardnessReason::SoftSelfLoop);
    ASSERT_TRUE(v.soft_loop);
    EXPECT_EQ(edge_witness(v.soft_loop->table, v.soft_loop->node, v.soft_loop->node), EdgeKind::Soft);
    ASSERT_TRUE(v.soft_loop->gadget);
    // The gadget expresses the witness table up to unary shifts, so it has the same soft loop.
    CostFunction expressed = express_gadget(*v.soft_loop->gadget);
    EXPECT_EQ(edge_witness(expressed, v.soft_loop->node, v.soft_loop->node), EdgeKind::Soft);
}

TEST(Classify, ParityHasNoMajority) {
    Verdict v = classify(parity_lang());
    ASSERT_EQ(v.kind, VerdictKind::NPHard);
    EXPECT_EQ(v.reason, HardnessReason::NoMajority);
    ASSERT_TRUE(v.refutation);
    EXPECT_TRUE(replay_refutation(parity_lang(), *v.refutation));
}

TEST(Classify, RejectsUnsupportedLanguages) {
    EXPECT_THROW(classify(Language(2, {cut_fn()})), CapabilityError);
    ClassifyBudgets b;
    b.max_domain = 3;
    EXPECT_THROW(classify(Language(4, {}, UnaryClosure::Finite), b), CapabilityError);
}

TEST(Classify, UnfinishedMajoritySearchIsUnknown) {
    ClassifyBudgets b;
    b.majority_nodes = 1;
    b.closure.rounds = 0;
    Verdict v = classify(Language(3, {equality_fn(3)}, UnaryClosure::Finite), b);
    EXPECT_EQ(v.kind, VerdictKind::Unknown);
    EXPECT_EQ(v.stage, "majority");
}

TEST(Classify, TrivialLanguageIsTractable) {
    Verdict v = classify(Language(3, {}, UnaryClosure::Finite));
    ASSERT_EQ(v.kind, VerdictKind::Tractable);
    EXPECT_EQ(v.tractable->m_set, all_pairs(3));
}

TEST(Classify, Deterministic) {
    Gen g(81);
    for (int i = 0; i < 10; ++i) {
        Language l(3, {g.function(3, 2, 30, 3)}, UnaryClosure::Finite);
        ClassifyBudgets b;
        b.closure.rounds = 2;
        b.closure.size = 200;
        EXPECT_EQ(certificate_json(classify(l, b), l), certificate_json(classify(l, b), l));
    }
}

TEST(Classify, TractableVerdictsAreVerified) {
    Gen g(82);
    int tractable = 0;
    for (int i = 0; i < 40; ++i) {
        const int d = g.range(2, 3);
        Language l(d, {g.function(d, 2, 30, 3)}, UnaryClosure::Finite);
        ClassifyBudgets b;
        b.closure.rounds = 2;
        b.closure.size = 200;
        Verdict v = classify(l, b);
        if (v.kind != VerdictKind::Tractable) continue;
        ++tractable;
        EXPECT_TRUE(check_multimorphism(v.tractable->stp, l).holds);
        EXPECT_TRUE(check_structure(v.tractable->stp, v.tractable->m_set).holds);
        EXPECT_TRUE(verify_mjn(v.tractable->triple, l, v.tractable->m_set).holds);
    }
    EXPECT_GT(tractable, 0);
}

TEST(Certificate, RoundTripsForEveryVerdict) {
    ClassifyBudgets one;
    one.closure.rounds = 1;
    for (const Language& l : {submodular_lang(), disequality_lang(), cut_lang(), parity_lang()}) {
        Verdict v = classify(l, one);
        CertificateCheck c = verify_certificate(certificate_json(v, l), l);
        EXPECT_TRUE(c.valid) << c.message;
        EXPECT_EQ(c.verdict, v.kind);
    }
}

TEST(Certificate, RejectsOtherLanguages) {
    Verdict v = classify(submodular_lang());
    CertificateCheck c = verify_certificate(certificate_json(v, submodular_lang()), cut_lang());
    EXPECT_FALSE(c.valid);
}

TEST(Certificate, RejectsTamperedTables) {
    Verdict v = classify(disequality_lang());
    json j = json::parse(certificate_json(v, disequality_lang()));
    // Flip the minority value on (0,0,1).
    j["triple"]["mn3"][1] = 1 - j["triple"]["mn3"][1].get<int>();
    EXPECT_FALSE(verify_certificate(j.dump(), disequality_lang()).valid);

    Verdict s = classify(submodular_lang());
    json k = json::parse(certificate_json(s, submodular_lang()));
    k["stp"]["meet"] = json::array({0, 1, 0, 1});
    EXPECT_FALSE(verify_certificate(k.dump(), submodular_lang()).valid);
}

TEST(Certificate, RejectsTamperedRefutation) {
    Verdict v = classify(parity_lang());
    json j = json::parse(certificate_json(v, parity_lang()));
    j["refutation"]["steps"] = json::array();
    EXPECT_FALSE(verify_certificate(j.dump(), parity_lang()).valid);
}

TEST(Certificate, RejectsTamperedSoftLoop) {
    ClassifyBudgets b;
    b.closure.rounds = 1;
    Verdict v = classify(cut_lang(), b);
    json j = json::parse(certificate_json(v, cut_lang()));
    j["soft_self_loop"]["table"]["table"] = json::array({0, 0, 0, 0});
    if (j["soft_self_loop"].contains("gadget")) j["soft_self_loop"].erase("gadget");
    EXPECT_FALSE(verify_certificate(j.dump(), cut_lang()).valid);

    // A gadget that adds a non-unary function is not an expression over the language.
    json g = json::parse(certificate_json(v, cut_lang()));
    ASSERT_TRUE(g["soft_self_loop"].contains("gadget"));
    g["soft_self_loop"]["gadget"]["language"]["functions"][0]["table"] = json::array({2, 0, 0, 2});
    EXPECT_FALSE(verify_certificate(g.dump(), cut_lang()).valid);
}

TEST(Certificate, RejectsOtherVersions) {
    Verdict v = classify(submodular_lang());
    json j = json::parse(certificate_json(v, submodular_lang()));
    j["version"] = "0.0.9";
    CertificateCheck c = verify_certificate(j.dump(), submodular_lang());
    EXPECT_FALSE(c.valid);
    EXPECT_NE(c.message.find("version"), std::string::npos);
}

TEST(Certificate, MalformedIsAParseError) {
    EXPECT_THROW(verify_certificate("{", submodular_lang()), ParseError);
    EXPECT_THROW(verify_certificate("{\"version\": \"0.1.0\"}", submodular_lang()), ParseError);
}
