#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "odh/diffam.hpp"
#include "odh/int_matrix.hpp"
#include "odh/legendre.hpp"
#include "odh/odesign.hpp"
#include "odh/sign_matrix.hpp"

namespace odh {

/// All formats are line-oriented text with a self-describing header, so the
/// matrices stay auditable with ordinary tools. Every writer's output is
/// accepted by the matching reader and re-serializes byte-identically.
///
///   SIGNMAT m   followed by m lines of m characters from {+, -}
///   ODMAT m     followed by m lines of m tokens from {0, x, -x, y, -y}
///   INTMAT m    followed by m lines of m signed integers
///
/// Difference families, Legendre pairs and label-form pairs are single JSON
/// objects: {"n":..,"blocks":[..]}, {"v":..,"U":[..],"V":[..]} and
/// {"v":..,"subgroup":[..],"labelsU":[..],"labelsV":[..]}.

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int read_header(std::istream& is, const std::string& magic) {
    std::string word;
    long long m = 0;
    if (!(is >> word) || word != magic || !(is >> m) || m <= 0)
        throw io_error("expected '" + magic + " <order>' header");
    is.ignore();  // trailing newline
    return static_cast<int>(m);
}

}  // namespace detail

inline void write_signmat(std::ostream& os, const SignMatrix& h) {
    int m = h.order();
    os << "SIGNMAT " << m << "\n";
    std::string line(m, '+');
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) line[j] = h.at(i, j) == 1 ? '+' : '-';
        os << line << "\n";
    }
}

inline SignMatrix read_signmat(std::istream& is) {
    int m = detail::read_header(is, "SIGNMAT");
    SignMatrix h(m);
    std::string line;
    for (int i = 0; i < m; ++i) {
        if (!std::getline(is, line)) throw io_error("SIGNMAT: truncated at row " + std::to_string(i));
        if (static_cast<int>(line.size()) != m)
            throw io_error("SIGNMAT: row " + std::to_string(i) + " has length " +
                           std::to_string(line.size()) + ", expected " + std::to_string(m));
        for (int j = 0; j < m; ++j) {
            if (line[j] == '-') h.set(i, j, -1);
            else if (line[j] != '+') throw io_error("SIGNMAT: invalid character in row " + std::to_string(i));
        }
    }
    return h;
}

inline void write_intmat(std::ostream& os, const IntMatrix& m) {
    os << "INTMAT " << m.order() << "\n";
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
}

inline IntMatrix read_intmat(std::istream& is) {
    int n = detail::read_header(is, "INTMAT");
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(is >> m.at(i, j))) throw io_error("INTMAT: truncated at row " + std::to_string(i));
    return m;
}

inline void write_odmat(std::ostream& os, const OdMatrix& m) {
    os << "ODMAT " << m.order() << "\n";
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            const OdCell& c = m.at(i, j);
            const char* tok = "0";
            if (c.cx == 1) tok = "x";
            else if (c.cx == -1) tok = "-x";
            else if (c.cy == 1) tok = "y";
            else if (c.cy == -1) tok = "-y";
            os << (j ? " " : "") << tok;
        }
        os << "\n";
    }
}

inline OdMatrix read_odmat(std::istream& is) {
    int n = detail::read_header(is, "ODMAT");
    OdMatrix m(n);
    std::string tok;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!(is >> tok)) throw io_error("ODMAT: truncated at row " + std::to_string(i));
            OdCell c;
            if (tok == "x") c.cx = 1;
            else if (tok == "-x") c.cx = -1;
            else if (tok == "y") c.cy = 1;
            else if (tok == "-y") c.cy = -1;
            else if (tok != "0") throw io_error("ODMAT: invalid token '" + tok + "'");
            m.at(i, j) = c;
        }
    return m;
}

inline void write_family(std::ostream& os, const DifferenceFamily& fam) {
    nlohmann::json j;
    j["n"] = fam.n;
    j["blocks"] = fam.blocks;
    os << j.dump() << "\n";
}

inline DifferenceFamily read_family(std::istream& is) {
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("family: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks") || !j["blocks"].is_array() ||
        j["blocks"].size() != 4)
        throw io_error("family: expected {\"n\":..,\"blocks\":[[..],[..],[..],[..]]}");
    DifferenceFamily fam;
    try {
        fam.n = j["n"].get<int>();
        for (int i = 0; i < 4; ++i) fam.blocks[i] = j["blocks"][i].get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("family: invalid JSON: ") + e.what());
    }
    return fam;
}

inline void write_pair(std::ostream& os, const LegendrePair& p) {
    nlohmann::json j;
    j["v"] = p.v;
    j["U"] = p.U;
    j["V"] = p.V;
    os << j.dump() << "\n";
}

/// Reads a pair file in either explicit or label form.
inline LegendrePair read_pair(std::istream& is) {
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("pair: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("v")) throw io_error("pair: missing \"v\"");
    try {
        int v = j["v"].get<int>();
        if (j.contains("U") && j.contains("V"))
            return LegendrePair{v, j["U"].get<std::vector<int>>(), j["V"].get<std::vector<int>>()};
        if (j.contains("subgroup") && j.contains("labelsU") && j.contains("labelsV")) {
            OrbitTable table = orbit_table(v, j["subgroup"].get<std::vector<int>>());
            return LegendrePair{v, decode_labels(table, j["labelsU"].get<std::vector<int>>()),
                                decode_labels(table, j["labelsV"].get<std::vector<int>>())};
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("pair: invalid JSON: ") + e.what());
    }
    throw io_error("pair: expected U/V or subgroup/labelsU/labelsV fields");
}

// file-path conveniences

template <typename T, typename Reader>
T read_file(const std::string& path, Reader reader) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open " + path);
    return reader(is);
}

template <typename Writer>
void write_file(const std::string& path, Writer writer) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot write " + path);
    writer(os);
}

inline LegpCheckpoint read_checkpoint_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open " + path);
    try {
        return read_checkpoint(is);
    } catch (const std::exception& e) {
        throw io_error(path + ": " + e.what());
    }
}

inline void write_checkpoint_file(const std::string& path, const LegpCheckpoint& cp) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot write " + path);
    write_checkpoint(os, cp);
}

}  // namespace odh
