// Runs the seven acceptance criteria and prints one line per criterion.

#include "tyv/harness.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace tyv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

void require_all_pass(Verdict& v, const CheckReport& r, const std::string& what) {
    for (const auto& it : r.items)
        if (it.status != "pass") {
            v.fail(what + " " + it.id + " " + it.status + ": " + it.detail.substr(0, 160));
            return;
        }
}

void require_items(Verdict& v, const CheckReport& r, const std::vector<std::string>& ids, const std::string& what) {
    for (const auto& id : ids) {
        bool found = false;
        for (const auto& it : r.items) found = found || it.id == id;
        if (!found) v.fail(what + " lacks item " + id);
    }
}

SuiteConfig config(const std::string& suite, const std::string& type = "") {
    SuiteConfig c;
    c.suite = suite;
    if (!type.empty()) c.type = type;
    return c;
}

void print(int n, const Verdict& v, const std::string& what, const std::string& timing) {
    std::printf("criterion %d: %s  %s [%s]%s%s\n", n, v.pass ? "PASS" : "FAIL", what.c_str(), timing.c_str(), v.note.empty() ? "" : "  ",
                v.note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    bool all = true;
    char buf[128];

    {
        Verdict v;
        auto t0 = Clock::now();
        for (const auto& t : classical_types()) {
            auto cd = std::make_shared<const ChevalleyData>(LieType::parse(t));
            CheckReport r;
            r.items = run_items(root_data_items(cd), 1);
            require_items(v, r, {"jacobi", "eta-symmetry"}, t);
            require_all_pass(v, r, t);
        }
        double s = seconds_since(t0);
        if (s >= 30) v.fail("took " + std::to_string(s) + " s");
        std::snprintf(buf, sizeof buf, "%.2f s total, limit 30 s", s);
        print(1, v, "root data: Jacobi and eta equalities for 9 types", buf);
        all = all && v.pass;
    }

    {
        Verdict v;
        double worst = 0;
        for (const auto& t : classical_types()) {
            auto t0 = Clock::now();
            SuiteConfig c = config("classical", t);
            c.zdeg = 6;
            CheckReport r = run_suite(c);
            require_items(v, r, {"tcfSerre2f", "extra-verified", "todo1", "todo2", "todo3"}, t);
            require_all_pass(v, r, t);
            double s = seconds_since(t0);
            worst = std::max(worst, s);
            if (s >= 60) v.fail(t + " took " + std::to_string(s) + " s");
        }
        std::snprintf(buf, sizeof buf, "slowest type %.2f s, limit 60 s per type", worst);
        print(2, v, "classical suite at z-degree 6, window 8", buf);
        all = all && v.pass;
    }

    {
        Verdict v;
        double worst = 0;
        for (const auto& t : embedding_types()) {
            auto t0 = Clock::now();
            CheckReport e = run_suite(config("embedding", t));
            CheckReport c = run_suite(config("casimir", t));
            require_items(v, e, {"HBrel", "bbi=j", "bbinej", "helper1", "helper2", "hh-cancellation", "J-identification"}, t);
            require_items(v, c, {"Omega", "omega-kp", "coprohi1"}, t);
            require_all_pass(v, e, t);
            require_all_pass(v, c, t);
            double s = seconds_since(t0);
            worst = std::max(worst, s);
            if (s >= 120) v.fail(t + " took " + std::to_string(s) + " s");
        }
        std::snprintf(buf, sizeof buf, "slowest type %.2f s, limit 120 s per type", worst);
        print(3, v, "embedding and Casimir suites for 8 types", buf);
        all = all && v.pass;
    }

    {
        Verdict v;
        auto t0 = Clock::now();
        SuiteConfig c = config("rank1");
        c.order = 8;
        c.maxidx = 10;
        CheckReport r = run_suite(c);
        require_items(v, r,
                      {"ty0", "ty1", "ty2", "add-rel", "xi+xi-", "xixi-", "xixj1", "xiuxi0", "hbcom1", "bi0biu", "h-est", "b-est",
                       "h-co-est", "b-co-est", "h-est-strong", "h-co-est-strong", "cap-rank"},
                      "rank1");
        require_all_pass(v, r, "rank1");
        double s = seconds_since(t0);
        if (s >= 300) v.fail("took " + std::to_string(s) + " s");
        std::snprintf(buf, sizeof buf, "%.2f s, limit 300 s", s);
        print(4, v, "rank-one Drinfeld suite, r+s <= 8, series to order 10, estimates to order 8", buf);
        all = all && v.pass;
    }

    CheckReport rtt;
    {
        Verdict v;
        auto t0 = Clock::now();
        SuiteConfig c = config("rtt");
        c.order = 6;
        rtt = run_suite(c);
        require_items(v, rtt,
                      {"rtt-closed-form", "quaternary", "symmetry", "qdet", "qdet-central", "sdet", "sdet-even", "sdet-central",
                       "qdet-grouplike", "sdet-grouplike", "bridge-coefficients", "bridge-relations", "bridge-fe", "bridge-images"},
                      "rtt");
        require_all_pass(v, rtt, "rtt");
        double s = seconds_since(t0);
        if (s >= 300) v.fail("took " + std::to_string(s) + " s");
        std::snprintf(buf, sizeof buf, "%.2f s, limit 300 s", s);
        print(5, v, "RTT suite and bridge to order 6", buf);
        all = all && v.pass;
    }

    {
        Verdict v;
        auto t0 = Clock::now();
        SuiteConfig c = config("classical", "C2");
        c.mutation = Mutation::parse("tcfSerre2f:-5");
        CheckReport r1 = run_suite(c);
        SuiteConfig e = config("embedding", "A2");
        e.mutation = Mutation::parse("phi_h_xsq:0");
        CheckReport r2 = run_suite(e);
        auto failed = [](const CheckReport& r, const std::string& id) {
            for (const auto& it : r.items)
                if (it.id == id) return it.status == "fail";
            return false;
        };
        auto count = [](const CheckReport& r) {
            int n = 0;
            for (const auto& it : r.items) n += it.status != "pass";
            return n;
        };
        if (!failed(r1, "tcfSerre2f")) v.fail("tcfSerre2f:-5 did not fail tcfSerre2f for C2");
        if (!failed(r2, "HBrel")) v.fail("phi_h_xsq:0 did not fail HBrel for A2");
        std::snprintf(buf, sizeof buf, "%d and %d items flipped, %.2f s", count(r1), count(r2), seconds_since(t0));
        print(6, v, "negative controls tcfSerre2f:-5 (C2) and phi_h_xsq:0 (A2)", buf);
        all = all && v.pass;
    }

    {
        Verdict v;
        const ItemResult* x = nullptr;
        for (const auto& it : rtt.items)
            if (it.id == "cross-engine") x = &it;
        if (!x) {
            v.fail("no cross-engine item in the RTT report");
        } else if (x->status != "pass") {
            v.fail(x->detail.substr(0, 300));
        }
        std::snprintf(buf, sizeof buf, "%lld ms", x ? x->millis : 0LL);
        print(7, v, "cross-engine agreement on every shared rank-one identity", buf);
        all = all && v.pass;
    }

    std::printf("acceptance: %s\n", all ? "all criteria pass" : "some criteria fail");
    return all ? 0 : 1;
}
