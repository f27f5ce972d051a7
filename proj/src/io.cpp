#include "axo/io.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <vector>

#include <json.hpp>

namespace axo::cli {

using linalg::Matrix;
using linalg::Vector;

namespace {

void check_document_shape(std::size_t rows, std::size_t cols) {
    if (rows < 3) {
        throw ParseError("matrix must have at least 3 rows (target dimension m >= 2), got " +
                         std::to_string(rows));
    }
    if (cols < 4) {
        throw ParseError("matrix must have at least 4 columns (source dimension n >= 3), got " +
                         std::to_string(cols));
    }
    if (rows >= cols) {
        throw ParseError("matrix must have fewer rows than columns (m < n), got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

InputDocument parse_text(std::string_view bytes) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= bytes.size()) {
        std::size_t eol = bytes.find('\n', pos);
        if (eol == std::string_view::npos) eol = bytes.size();
        std::string_view line = bytes.substr(pos, eol - pos);
        ++line_no;
        const std::size_t line_start = pos;
        pos = eol + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        std::vector<double> row;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            std::string_view token = line.substr(start, i - start);
            const char* first = token.data();
            const char* last = token.data() + token.size();
            if (!token.empty() && token.front() == '+') ++first;  // from_chars rejects '+'
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
                throw ParseError("invalid number '" + std::string(token) + "'", line_no,
                                 start + 1);
            }
            row.push_back(value);
        }
        if (!row.empty()) {
            if (!rows.empty() && row.size() != rows.front().size()) {
                throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(rows.front().size()),
                                 line_no, 1);
            }
            rows.push_back(std::move(row));
        }
        if (line_start >= bytes.size()) break;
    }
    if (rows.empty()) throw ParseError("no matrix rows in input");
    check_document_shape(rows.size(), rows.front().size());

    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return InputDocument{std::move(m), {}, {}, {}};
}

std::optional<double> read_tolerance(const nlohmann::json& tols, const char* key) {
    if (!tols.contains(key)) return std::nullopt;
    const auto& v = tols.at(key);
    if (!v.is_number() || !(v.get<double>() > 0.0)) {
        throw ParseError(std::string("tolerance '") + key + "' must be a positive number");
    }
    return v.get<double>();
}

InputDocument parse_json(std::string_view bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
    if (!j.contains("matrix")) throw ParseError("missing 'matrix' key");
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty()) throw ParseError("'matrix' must be an array of rows");

    std::size_t cols = 0;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("'matrix' rows must be arrays");
        if (cols == 0) cols = row.size();
        if (row.size() != cols || cols == 0) throw ParseError("'matrix' rows have unequal length");
        for (const auto& v : row) {
            if (!v.is_number()) throw ParseError("'matrix' entries must be numbers");
        }
    }
    check_document_shape(rows.size(), cols);

    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t jx = 0; jx < cols; ++jx) {
            const double v = rows[i][jx].get<double>();
            if (!std::isfinite(v)) throw ParseError("'matrix' entries must be finite");
            m(i, jx) = v;
        }
    }

    InputDocument doc{std::move(m), {}, {}, {}};
    if (j.contains("tolerances")) {
        const auto& tols = j.at("tolerances");
        if (!tols.is_object()) throw ParseError("'tolerances' must be an object");
        doc.tau_rel = read_tolerance(tols, "tau_rel");
        doc.tau_abs = read_tolerance(tols, "tau_abs");
        doc.tau_rank = read_tolerance(tols, "tau_rank");
    }
    return doc;
}

// Minimal compact writer; keys are emitted in a fixed order by the callers
// and numbers through format_double, which is what makes reports
// byte-deterministic.
class JsonWriter {
public:
    std::string take() { return std::move(out_); }

    void key(std::string_view name) {
        comma();
        out_ += '"';
        out_ += name;
        out_ += "\":";
    }

    void begin_object() {
        comma();
        out_ += '{';
    }
    void end_object() { out_ += '}'; }
    void begin_array() {
        comma();
        out_ += '[';
    }
    void end_array() { out_ += ']'; }

    void value(double v) {
        comma();
        out_ += format_double(v);
    }
    void value(long long v) {
        comma();
        out_ += std::to_string(v);
    }
    void value(bool v) {
        comma();
        out_ += v ? "true" : "false";
    }
    void value(std::string_view s) {
        comma();
        out_ += '"';
        out_ += s;
        out_ += '"';
    }
    void null() {
        comma();
        out_ += "null";
    }

    void vector(const Vector& v) {
        begin_array();
        for (std::size_t i = 0; i < v.dim(); ++i) value(v[i]);
        end_array();
    }

    void matrix(const Matrix& m) {
        begin_array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            begin_array();
            for (std::size_t j = 0; j < m.cols(); ++j) value(m(i, j));
            end_array();
        }
        end_array();
    }

private:
    // A separator is due unless we are at the start or right after '{', '[' or ':'.
    void comma() {
        if (out_.empty()) return;
        const char c = out_.back();
        if (c != '{' && c != '[' && c != ':') out_ += ',';
    }

    std::string out_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string numbers_line(const std::vector<double>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ' ';
        s += format_double(vs[i]);
    }
    return s;
}

std::string numbers_line(const Vector& v) {
    return numbers_line(std::vector<double>(v.data()));
}

void append_summary(std::string& out, const criterion::AnalysisReport& r) {
    out += "# dims: n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) +
           " threshold=" + std::to_string(criterion::decomposability_threshold(r.n, r.m)) + "\n";
    out += std::string("# preconditions: central=") + yes_no(r.preconditions.central) +
           " surjective=" + yes_no(r.preconditions.surjective) + "\n";
    if (r.spectrum) {
        out += "# singular values of reduced matrix: " + numbers_line(r.spectrum->sigma) + "\n";
        out += "# least multiplicity: " + std::to_string(r.spectrum->least_multiplicity) +
               " (need >= " + std::to_string(r.spectrum->threshold) + ")\n";
    }
    if (r.central_similarity) {
        out += std::string("# central projection + similarity: ") +
               yes_no(*r.central_similarity) + "\n";
        out += std::string("# orthogonal central projection + similarity: ") +
               yes_no(*r.orthogonal_similarity);
        if (r.v_hat) out += " (v = " + format_double(*r.v_hat) + ")";
        out += "\n";
    } else {
        out += "# hypotheses not satisfied; decomposability verdicts unavailable\n";
    }
    if (r.principal_point) {
        out += "# principal point: " + numbers_line(*r.principal_point) + "\n";
    }
    out += "# vanishing hyperplane: " + numbers_line(r.vanishing_hyperplane) + "\n";
}

}  // namespace

criterion::ToleranceConfig InputDocument::tolerances(const criterion::ToleranceConfig& base) const {
    criterion::ToleranceConfig tol = base;
    if (tau_rel) tol.tau_rel = *tau_rel;
    if (tau_abs) tol.tau_abs = *tau_abs;
    if (tau_rank) tol.tau_rank = *tau_rank;
    return tol;
}

InputDocument parse_input(std::string_view bytes, InputFormat format) {
    return format == InputFormat::text ? parse_text(bytes) : parse_json(bytes);
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_report(const criterion::AnalysisReport& r, bool pretty) {
    JsonWriter w;
    w.begin_object();
    w.key("schema_version");
    w.value(std::string_view("1"));
    w.key("dims");
    w.begin_object();
    w.key("n");
    w.value(static_cast<long long>(r.n));
    w.key("m");
    w.value(static_cast<long long>(r.m));
    w.key("threshold");
    w.value(static_cast<long long>(criterion::decomposability_threshold(r.n, r.m)));
    w.end_object();
    w.key("preconditions");
    w.begin_object();
    w.key("central");
    w.value(r.preconditions.central);
    w.key("surjective");
    w.value(r.preconditions.surjective);
    w.end_object();
    w.key("reduced_matrix");
    if (r.reduced) w.matrix(*r.reduced); else w.null();
    w.key("singular_values");
    if (r.spectrum) {
        w.begin_array();
        for (double s : r.spectrum->sigma) w.value(s);
        w.end_array();
    } else {
        w.null();
    }
    w.key("least_multiplicity");
    if (r.spectrum) w.value(static_cast<long long>(r.spectrum->least_multiplicity)); else w.null();
    w.key("central_similarity");
    if (r.central_similarity) w.value(*r.central_similarity); else w.null();
    w.key("orthogonal_similarity");
    if (r.orthogonal_similarity) w.value(*r.orthogonal_similarity); else w.null();
    w.key("v_hat");
    if (r.v_hat) w.value(*r.v_hat); else w.null();
    w.key("principal_point");
    if (r.principal_point) w.vector(*r.principal_point); else w.null();
    w.key("vanishing_hyperplane");
    w.vector(r.vanishing_hyperplane);
    w.key("tolerances");
    w.begin_object();
    w.key("tau_rel");
    w.value(r.tolerances.tau_rel);
    w.key("tau_abs");
    w.value(r.tolerances.tau_abs);
    w.key("tau_rank");
    w.value(r.tolerances.tau_rank);
    w.end_object();
    w.end_object();

    std::string out = w.take();
    out += '\n';
    if (pretty) append_summary(out, r);
    return out;
}

std::string format_instance(const generator::GeneratedInstance& inst) {
    JsonWriter w;
    w.begin_object();
    w.key("matrix");
    w.matrix(inst.cm.matrix());
    w.key("label");
    switch (inst.label) {
        case generator::Label::CentralSimilarity: w.value(std::string_view("central")); break;
        case generator::Label::OrthogonalSimilarity: w.value(std::string_view("orthogonal")); break;
        case generator::Label::PrescribedSpectrum: w.value(std::string_view("spectrum")); break;
        case generator::Label::RandomValid: w.value(std::string_view("random")); break;
    }
    w.end_object();
    std::string out = w.take();
    out += '\n';
    return out;
}

}  // namespace axo::cli
