#include "matsos/cli/commands.hpp"

#include "matsos/errors.hpp"
#include "matsos/exactarith/four_squares.hpp"
#include "matsos/matrixcert/certify.hpp"
#include "matsos/matrixcert/serialize.hpp"
#include "matsos/multipoly/parser.hpp"
#include "matsos/polymatrix/matrix_io.hpp"
#include "matsos/polymatrix/psd_check.hpp"

#include <ostream>

namespace matsos::cli {

namespace {

std::string stage_of(const Error& e) { return e.stage().empty() ? std::string() : " [" + e.stage() + "]"; }

std::string index_set(const std::vector<std::size_t>& rows) {
    std::string s = "{";
    for (std::size_t k = 0; k < rows.size(); ++k) s += (k ? "," : "") + std::to_string(rows[k] + 1);
    return s + "}";
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const NotPSD& e) {
        err << "not positive semidefinite" << stage_of(e) << ": " << e.what() << "\n";
        return exit_code::kRefuted;
    } catch (const ScalarSOSUnavailable& e) {
        err << "scalar certificate unavailable" << stage_of(e) << ": " << e.what() << "\n";
        for (const auto& [tag, why] : e.reasons()) err << "  " << tag << ": " << why << "\n";
        return exit_code::kNoScalarCert;
    } catch (const VerificationFailed& e) {
        err << "internal verification failure" << stage_of(e) << ": " << e.what() << "\n";
        return exit_code::kInternal;
    } catch (const MissingScalarCert& e) {
        err << "internal error" << stage_of(e) << ": " << e.what() << "\n";
        return exit_code::kInternal;
    } catch (const LemmaViolation& e) {
        err << "hypothesis violated" << stage_of(e) << ": " << e.what() << "\n";
        for (const auto& w : e.witness()) err << "  " << w << "\n";
        return exit_code::kHypothesis;
    } catch (const NotDiagonalizable& e) {
        err << "hypothesis violated" << stage_of(e) << ": " << e.what() << "\n";
        return exit_code::kHypothesis;
    } catch (const NotCoprime& e) {
        err << "hypothesis violated" << stage_of(e) << ": " << e.what() << "\n";
        return exit_code::kHypothesis;
    } catch (const Error& e) {
        err << "input error" << stage_of(e) << ": " << e.what() << "\n";
        return exit_code::kInput;
    }
}

CertificateStore load_store(const RunConfig& config, const VarSet& vars) {
    if (!config.store_path) return {};
    return read_certificate_store(*config.store_path, vars);
}

}  // namespace

int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        MatrixInput in = read_matrix_file(config.input_path);
        CertificateStore store = load_store(config, in.vars);
        CertifyOptions options;
        options.samples = config.samples;
        options.seed = config.seed;
        MatrixSOSCert cert = certify(in.matrix, in.vars, store, options);
        if (!config.output_path.empty()) write_certificate_file(config.output_path, cert);
        out << "d: " << cert.minpoly.d << "\n";
        out << "square_count: " << cert.square_count << "\n";
        for (const auto& [i, sc] : cert.scalar_certs) {
            out << "a" << i << ": " << sc.provider << ", " << sc.squares.size()
                << (sc.squares.size() == 1 ? " square" : " squares") << "\n";
        }
        if (!config.output_path.empty()) out << "certificate: " << config.output_path << "\n";
        return exit_code::kOk;
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        MatrixInput in = read_matrix_file(config.input_path);
        MatrixSOSCert cert = read_certificate_file(config.cert_path);
        if (cert.dim != in.matrix.dim() || !(cert.vars == in.vars)) {
            err << "input error: certificate is " << cert.dim << "x" << cert.dim << " over " << cert.vars.size()
                << " variables, matrix is " << in.matrix.dim() << "x" << in.matrix.dim() << " over "
                << in.vars.size() << "\n";
            return exit_code::kInput;
        }
        MatrixVerifyReport report = verify_matrix_cert(in.matrix, cert);
        if (!report.ok()) {
            const MatrixDiscrepancy& d = *report.discrepancy;
            err << "verification failed (" << d.check << "): " << d.detail << "\n";
            return d.check == "dimension" ? exit_code::kInput : exit_code::kRefuted;
        }
        out << "verified: " << cert.squares.size() << " squares, " << report.classes << " classes\n";
        return exit_code::kOk;
    });
}

int cmd_minpoly(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        MatrixInput in = read_matrix_file(config.input_path);
        MinPolyForm mp = minimal_polynomial(in.matrix);
        out << "d: " << mp.d << "\n";
        for (int i = mp.d; i >= 0; --i) out << "a" << i << ": " << print_poly(mp.a[static_cast<std::size_t>(i)], in.vars) << "\n";
        return exit_code::kOk;
    });
}

int cmd_minors(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        MatrixInput in = read_matrix_file(config.input_path);
        for (const auto& m : principal_minors(in.matrix)) out << index_set(m.rows) << ": " << print_poly(m.value, in.vars) << "\n";
        return exit_code::kOk;
    });
}

int cmd_check_psd(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        MatrixInput in = read_matrix_file(config.input_path);
        PsdReport report = psd_sample_check(in.matrix, config.samples, config.seed);
        if (report.pass()) {
            out << "pass: no negative principal minor in " << report.samples << " samples\n";
            return exit_code::kOk;
        }
        const PsdWitness& w = *report.witness;
        out << "fail: principal minor " << index_set(w.minor) << " = " << w.value.to_string();
        for (std::size_t v = 0; v < w.point.size(); ++v) {
            out << (v ? ", " : " at ") << in.vars.name(v) << " = " << w.point[v].to_string();
        }
        out << "\n";
        return exit_code::kRefuted;
    });
}

int cmd_four_squares(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        BigRat q = BigRat::parse(config.value);
        FourSquares fs = four_squares_rational(q);
        out << q.to_string() << " =";
        for (std::size_t k = 0; k < fs.parts.size(); ++k) {
            const BigRat& p = fs.parts[k];
            const std::string s = p.to_string();
            out << (k ? " + " : " ") << (s.find('/') == std::string::npos ? s : "(" + s + ")") << "^2";
        }
        out << "\n";
        return exit_code::kOk;
    });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.command == "certify") return cmd_certify(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "minpoly") return cmd_minpoly(config, out, err);
    if (config.command == "minors") return cmd_minors(config, out, err);
    if (config.command == "check-psd") return cmd_check_psd(config, out, err);
    if (config.command == "four-squares") return cmd_four_squares(config, out, err);
    err << "unknown command '" << config.command << "'\n";
    return exit_code::kUsage;
}

}  // namespace matsos::cli
