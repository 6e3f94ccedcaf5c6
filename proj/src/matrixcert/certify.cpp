#include "matsos/matrixcert/certify.hpp"

#include "matsos/errors.hpp"
#include "matsos/multipoly/parser.hpp"
#include "matsos/polymatrix/psd_check.hpp"
#include "matsos/scalarsos/pipeline.hpp"

#include <chrono>

namespace matsos {

namespace {

class StageTimer {
public:
    explicit StageTimer(MatrixSOSCert& sink) : sink_(sink) {}

    template <typename F>
    auto run(const char* name, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        try {
            if constexpr (std::is_void_v<decltype(f())>) {
                f();
                record(name, start);
            } else {
                auto result = f();
                record(name, start);
                return result;
            }
        } catch (Error& e) {
            if (e.stage().empty()) e.set_stage(name);
            throw;
        }
    }

private:
    void record(const char* name, std::chrono::steady_clock::time_point start) {
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        sink_.timings.emplace_back(name, dt.count());
    }

    MatrixSOSCert& sink_;
};

}  // namespace

MatrixSOSCert certify(const SymbolicMatrix& a, const VarSet& vars, const CertificateStore& store,
                      const CertifyOptions& options) {
    MatrixSOSCert timing;
    StageTimer timer(timing);

    timer.run(stage::kInput, [&] {
        if (a.dim() == 0) throw DomainError("empty matrix");
        if (a.nvars() != vars.size()) throw DomainError("matrix and variable set disagree on variable count");
        if (!a.is_symmetric()) throw DomainError("matrix is not symmetric");
        if (!a.is_polynomial()) throw DomainError("matrix has non-polynomial entries");
    });

    timer.run(stage::kPsdCheck, [&] {
        PsdReport report = psd_sample_check(a, options.samples, options.seed);
        if (report.pass()) return;
        const PsdWitness& w = *report.witness;
        std::vector<std::string> point;
        for (std::size_t v = 0; v < w.point.size(); ++v) point.push_back(vars.name(v) + " = " + w.point[v].to_string());
        std::string rows;
        for (auto r : w.minor) rows += (rows.empty() ? "" : ",") + std::to_string(r + 1);
        std::string where;
        for (const auto& p : point) where += (where.empty() ? " at " : ", ") + p;
        throw NotPSD("principal minor {" + rows + "} is " + w.value.to_string() + where, std::move(point), w.minor);
    });

    MinPolyForm mp = timer.run(stage::kMinimalPolynomial, [&] { return minimal_polynomial(a); });
    timer.run(stage::kLemmaCheck, [&] { check_lemma_form(mp, options.samples, options.seed); });

    auto certs = timer.run(stage::kScalarSOS, [&] {
        std::map<int, ScalarSOSCert> out;
        for (int i = 0; i < mp.d; ++i) {
            const Polynomial& ai = mp.a[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            try {
                out.emplace(i, scalar_sos_pipeline(ai, store, vars));
            } catch (const ScalarSOSUnavailable& e) {
                throw e.with_index(i);
            }
        }
        return out;
    });

    EvenOddSplit split = timer.run(stage::kSplit, [&] { return split_even_odd(mp); });
    UnivarPoly q = timer.run(stage::kInvert, [&] { return invert_b_mod_p(split, mp); });
    MatrixSOSCert cert = timer.run(stage::kBuild, [&] { return build_squares(a, mp, q, std::move(certs), vars); });

    timer.run(stage::kVerify, [&] {
        MatrixVerifyReport report = verify_matrix_cert(a, cert, options.check_commutation);
        if (!report.ok()) throw VerificationFailed(report.discrepancy->detail);
    });
    cert.timings = std::move(timing.timings);
    return cert;
}

}  // namespace matsos
