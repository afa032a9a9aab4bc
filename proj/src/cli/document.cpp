#include "qtrans/cli/document.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace qtrans {

namespace {

using Json = nlohmann::json;

Scalar parse_part_pair(const Json& j, Mode mode, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw DocumentError(where + ": scalar must be [re, im]");
    mpq_class parts[2];
    double fparts[2] = {0, 0};
    for (int p = 0; p < 2; ++p) {
        const Json& x = j[p];
        if (x.is_string()) {
            const auto q = parse_rational(x.get<std::string>());
            if (!q) throw DocumentError(where + ": malformed rational '" + x.get<std::string>() + "'");
            parts[p] = *q;
            fparts[p] = q->get_d();
        } else if (x.is_number_integer()) {
            parts[p] = mpq_class(x.get<long>());
            fparts[p] = static_cast<double>(x.get<long>());
        } else if (x.is_number_float()) {
            if (mode == Mode::Exact) throw DocumentError(where + ": float number in an exact document");
            fparts[p] = x.get<double>();
        } else {
            throw DocumentError(where + ": scalar parts must be numbers or rational strings");
        }
    }
    if (mode == Mode::Exact) return Scalar::exact(parts[0], parts[1]);
    return Scalar(fparts[0], fparts[1]);
}

const Json& require(const Json& root, const char* key) {
    if (!root.contains(key)) throw DocumentError(std::string("missing key \"") + key + "\"");
    return root.at(key);
}

Tensor parse_vector(const Json& j, std::size_t n, Mode mode, const std::string& key) {
    if (!j.is_array() || j.size() != n) throw DocumentError(key + ": expected " + std::to_string(n) + " scalars");
    Tensor t = Tensor::vector(n, mode);
    for (std::size_t i = 0; i < n; ++i) t[i] = parse_part_pair(j[i], mode, key + "[" + std::to_string(i) + "]");
    return t;
}

Tensor parse_matrix(const Json& j, std::size_t n, Mode mode, const std::string& key) {
    if (!j.is_array() || j.size() != n) throw DocumentError(key + ": expected " + std::to_string(n) + " rows");
    Tensor t = Tensor::matrix(n, n, mode);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n)
            throw DocumentError(key + ": row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            t(r, c) = parse_part_pair(j[r][c], mode, key + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return t;
}

Tensor parse_sparse(const Json& j, std::size_t n, Mode mode, const std::string& key) {
    if (!j.is_array()) throw DocumentError(key + ": expected an array of [i, j, k, re, im] entries");
    Tensor t({n, n, n}, mode);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const Json& entry = j[e];
        const std::string where = key + " entry " + std::to_string(e);
        if (!entry.is_array() || entry.size() != 5) throw DocumentError(where + ": expected [i, j, k, re, im]");
        std::size_t idx[3];
        for (int a = 0; a < 3; ++a) {
            if (!entry[a].is_number_integer() || entry[a].get<long>() < 0 ||
                static_cast<std::size_t>(entry[a].get<long>()) >= n)
                throw DocumentError(where + ": index out of range");
            idx[a] = static_cast<std::size_t>(entry[a].get<long>());
        }
        if (!seen.emplace(idx[0], idx[1], idx[2]).second) throw DocumentError(where + ": duplicate index");
        t(idx[0], idx[1], idx[2]) = parse_part_pair(Json::array({entry[3], entry[4]}), mode, where);
    }
    return t;
}

std::string part_json(const Scalar& s, bool imag, Mode mode) {
    if (mode == Mode::Exact) {
        const auto& q = s.exact_value();
        return Json(rational_to_string(imag ? q.im : q.re)).dump();
    }
    return Json(imag ? s.imag() : s.real()).dump();
}

std::string scalar_json(const Scalar& s, Mode mode) {
    return "[" + part_json(s, false, mode) + ", " + part_json(s, true, mode) + "]";
}

bool is_zero_entry(const Scalar& s) { return s.is_exact() ? s.is_zero() : (s.real() == 0.0 && s.imag() == 0.0); }

}  // namespace

FiniteHopfStar parse_document(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DocumentError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw DocumentError("document must be a JSON object");
    Mode mode = Mode::Float;
    if (root.contains("mode")) {
        const Json& m = root.at("mode");
        if (m == "exact")
            mode = Mode::Exact;
        else if (m != "float")
            throw DocumentError("mode must be \"exact\" or \"float\"");
    }
    const Json& dim = require(root, "dim");
    if (!dim.is_number_integer() || dim.get<long>() <= 0) throw DocumentError("dim must be a positive integer");
    const auto n = static_cast<std::size_t>(dim.get<long>());
    const Json& basis = require(root, "basis");
    if (!basis.is_array() || basis.size() != n) throw DocumentError("basis must list dim names");
    std::vector<std::string> names;
    for (const auto& b : basis) {
        if (!b.is_string()) throw DocumentError("basis names must be strings");
        names.push_back(b.get<std::string>());
    }
    try {
        return FiniteHopfStar(std::move(names), parse_sparse(require(root, "mult"), n, mode, "mult"),
                              parse_vector(require(root, "unit"), n, mode, "unit"),
                              parse_sparse(require(root, "comult"), n, mode, "comult"),
                              parse_vector(require(root, "counit"), n, mode, "counit"),
                              parse_matrix(require(root, "antipode"), n, mode, "antipode"),
                              parse_matrix(require(root, "star"), n, mode, "star"));
    } catch (const DocumentError&) {
        throw;
    } catch (const Error& e) {
        throw DocumentError(e.what());
    }
}

std::string serialize_document(const FiniteHopfStar& h) {
    const Mode mode = h.mode();
    const std::size_t n = h.dim();
    std::ostringstream os;
    os << "{\n";
    os << "  \"mode\": " << Json(to_string(mode)).dump() << ",\n";
    os << "  \"dim\": " << n << ",\n";
    os << "  \"basis\": " << Json(h.basis_names()).dump() << ",\n";
    auto vector_line = [&](const char* key, const Tensor& v) {
        os << "  \"" << key << "\": [";
        for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << scalar_json(v[i], mode);
        os << "],\n";
    };
    auto sparse = [&](const char* key, const Tensor& t) {
        os << "  \"" << key << "\": [";
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& s = t(i, j, k);
                    if (is_zero_entry(s)) continue;
                    os << (first ? "\n" : ",\n") << "    [" << i << ", " << j << ", " << k << ", "
                       << part_json(s, false, mode) << ", " << part_json(s, true, mode) << "]";
                    first = false;
                }
        os << (first ? "" : "\n  ") << "],\n";
    };
    auto matrix = [&](const char* key, const Tensor& t, bool last) {
        os << "  \"" << key << "\": [";
        for (std::size_t r = 0; r < n; ++r) {
            os << (r ? ",\n" : "\n") << "    [";
            for (std::size_t c = 0; c < n; ++c) os << (c ? ", " : "") << scalar_json(t(r, c), mode);
            os << "]";
        }
        os << "\n  ]" << (last ? "\n" : ",\n");
    };
    vector_line("unit", h.unit());
    vector_line("counit", h.counit());
    sparse("mult", h.mult());
    sparse("comult", h.comult());
    matrix("antipode", h.antipode(), false);
    matrix("star", h.star(), true);
    os << "}\n";
    return os.str();
}

FiniteHopfStar load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

void save_document(const std::string& path, const FiniteHopfStar& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot write " + path);
    out << serialize_document(h);
    if (!out) throw DocumentError("write failed for " + path);
}

}  // namespace qtrans
