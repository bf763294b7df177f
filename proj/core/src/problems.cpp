#include "maocs/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace maocs {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double distance_g_dtlz1(const DecisionVector& x, int m) {
    const int d = static_cast<int>(x.size());
    double g = 0.0;
    for (int i = m - 1; i < d; ++i) {
        const double v = x[i] - 0.5;
        g += v * v - std::cos(20.0 * std::numbers::pi * v);
    }
    return 100.0 * (static_cast<double>(d - m + 1) + g);
}

double distance_g_sphere(const DecisionVector& x, int m) {
    const int d = static_cast<int>(x.size());
    double g = 0.0;
    for (int i = m - 1; i < d; ++i) {
        const double v = x[i] - 0.5;
        g += v * v;
    }
    return g;
}

ObjectiveVector dtlz1(const DecisionVector& x, int m) {
    const double g = distance_g_dtlz1(x, m);
    ObjectiveVector f(m);
    for (int j = 0; j < m; ++j) {
        double v = 0.5 * (1.0 + g);
        for (int i = 0; i < m - 1 - j; ++i) v *= x[i];
        if (j > 0) v *= 1.0 - x[m - 1 - j];
        f[j] = v;
    }
    return f;
}

/// Spherical construction shared by dtlz2/dtlz5: objectives from a vector of
/// m-1 angles and a distance value g.
ObjectiveVector spherical_objectives(const std::vector<double>& theta, double g) {
    const int m = static_cast<int>(theta.size()) + 1;
    ObjectiveVector f(m);
    for (int j = 0; j < m; ++j) {
        double v = 1.0 + g;
        for (int i = 0; i < m - 1 - j; ++i) v *= std::cos(theta[i]);
        if (j > 0) v *= std::sin(theta[m - 1 - j]);
        f[j] = v;
    }
    return f;
}

ObjectiveVector dtlz2(const DecisionVector& x, int m) {
    const double g = distance_g_sphere(x, m);
    std::vector<double> theta(m - 1);
    for (int i = 0; i < m - 1; ++i) theta[i] = x[i] * kHalfPi;
    return spherical_objectives(theta, g);
}

ObjectiveVector dtlz5(const DecisionVector& x, int m) {
    const double g = distance_g_sphere(x, m);
    std::vector<double> theta(m - 1);
    theta[0] = x[0] * kHalfPi;
    for (int i = 1; i < m - 1; ++i) {
        theta[i] = std::numbers::pi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[i]);
    }
    return spherical_objectives(theta, g);
}

ObjectiveVector dtlz7(const DecisionVector& x, int m) {
    const int d = static_cast<int>(x.size());
    double g = 0.0;
    for (int i = m - 1; i < d; ++i) g += x[i];
    g = 1.0 + 9.0 * g / static_cast<double>(d - m + 1);

    ObjectiveVector f(m);
    double h = static_cast<double>(m);
    for (int j = 0; j < m - 1; ++j) {
        f[j] = x[j];
        h -= f[j] / (1.0 + g) * (1.0 + std::sin(3.0 * std::numbers::pi * f[j]));
    }
    f[m - 1] = (1.0 + g) * h;
    return f;
}

/// All compositions of `total` into `parts` nonnegative integers, first part
/// descending; the simplex-lattice reference directions.
void compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        prefix.push_back(v);
        compositions(total - v, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<double>> simplex_lattice(int m, std::size_t n) {
    // Smallest lattice resolution whose size reaches n, then an even
    // subsample back down to exactly n.
    int h = 1;
    auto lattice_size = [m](int hh) {
        double size = 1.0;
        for (int i = 1; i <= m - 1; ++i) {
            size *= static_cast<double>(hh + i) / static_cast<double>(i);
        }
        return size;
    };
    while (lattice_size(h) < static_cast<double>(n)) ++h;

    std::vector<std::vector<int>> grid;
    std::vector<int> prefix;
    compositions(h, m, prefix, grid);

    std::vector<std::vector<double>> weights;
    weights.reserve(n);
    const std::size_t total = grid.size();
    for (std::size_t j = 0; j < n; ++j) {
        // Even subsample covering both ends.
        const std::size_t pick =
            (n == 1) ? 0 : (j * (total - 1)) / (n - 1);
        std::vector<double> w(m);
        for (int i = 0; i < m; ++i) w[i] = static_cast<double>(grid[pick][i]) / h;
        weights.push_back(std::move(w));
    }
    return weights;
}

std::vector<double> normalize_to_sphere(const std::vector<double>& w) {
    double norm = 0.0;
    for (double v : w) norm += v * v;
    norm = std::sqrt(norm);
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] / norm;
    return out;
}

/// 1-D value set of dtlz7's position coordinates on the Pareto front: f is
/// kept iff no smaller f' has w(f') >= w(f), where w(f) = f (1 + sin(3 pi f)).
std::vector<double> dtlz7_optimal_values(std::size_t grid) {
    std::vector<double> kept;
    double running_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(grid - 1);
        const double w = f * (1.0 + std::sin(3.0 * std::numbers::pi * f));
        if (w > running_max) {
            kept.push_back(f);
            running_max = w;
        }
    }
    return kept;
}

std::vector<ObjectiveVector> dtlz7_front(int m, std::size_t n) {
    const std::vector<double> values = dtlz7_optimal_values(20001);
    const std::size_t per_axis = std::max<std::size_t>(
        2, static_cast<std::size_t>(
               std::ceil(std::pow(static_cast<double>(n), 1.0 / (m - 1)))));
    std::vector<double> axis;
    for (std::size_t j = 0; j < per_axis; ++j) {
        const std::size_t pick = (per_axis == 1) ? 0 : (j * (values.size() - 1)) / (per_axis - 1);
        axis.push_back(values[pick]);
    }

    // Cartesian product over the m-1 position coordinates, then an even
    // subsample to n.
    std::size_t total = 1;
    for (int i = 0; i < m - 1; ++i) total *= axis.size();
    std::vector<ObjectiveVector> front;
    front.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t code = (n == 1) ? 0 : (j * (total - 1)) / (n - 1);
        ObjectiveVector f(m);
        double h = static_cast<double>(m);
        for (int i = 0; i < m - 1; ++i) {
            f[i] = axis[code % axis.size()];
            code /= axis.size();
            h -= f[i] / 2.0 * (1.0 + std::sin(3.0 * std::numbers::pi * f[i]));
        }
        f[m - 1] = 2.0 * h;
        front.push_back(std::move(f));
    }
    // The even subsample can repeat lattice cells when total < n.
    std::sort(front.begin(), front.end());
    front.erase(std::unique(front.begin(), front.end()), front.end());
    return front;
}

}  // namespace

ProblemFamily parse_family(const std::string& name) {
    std::string flat;
    for (char c : name) flat += (c == '_') ? '-' : static_cast<char>(std::tolower(c));
    if (flat == "dtlz1") return ProblemFamily::dtlz1;
    if (flat == "dtlz2") return ProblemFamily::dtlz2;
    if (flat == "inverted-dtlz2" || flat == "idtlz2") return ProblemFamily::inverted_dtlz2;
    if (flat == "scaled-dtlz2" || flat == "sdtlz2") return ProblemFamily::scaled_dtlz2;
    if (flat == "dtlz5") return ProblemFamily::dtlz5;
    if (flat == "dtlz7") return ProblemFamily::dtlz7;
    if (flat == "tabular") return ProblemFamily::tabular;
    throw ConfigError("unknown problem family '" + name + "'");
}

std::string family_name(ProblemFamily family) {
    switch (family) {
        case ProblemFamily::dtlz1: return "dtlz1";
        case ProblemFamily::dtlz2: return "dtlz2";
        case ProblemFamily::inverted_dtlz2: return "inverted-dtlz2";
        case ProblemFamily::scaled_dtlz2: return "scaled-dtlz2";
        case ProblemFamily::dtlz5: return "dtlz5";
        case ProblemFamily::dtlz7: return "dtlz7";
        case ProblemFamily::tabular: return "tabular";
    }
    return "unknown";
}

int ProblemSpec::resolved_variables() const {
    if (family == ProblemFamily::tabular) return 1;
    if (num_variables > 0) return num_variables;
    return num_objectives - 1 + distance_vars;
}

std::vector<double> ProblemSpec::resolved_scale() const {
    if (!scale.empty()) return scale;
    std::vector<double> s(num_objectives);
    double v = 1.0;
    for (int i = 0; i < num_objectives; ++i) {
        s[i] = v;
        v *= 10.0;
    }
    return s;
}

void ProblemSpec::validate() const {
    if (family == ProblemFamily::tabular) {
        if (table.empty()) throw ConfigError("tabular problem has no rows loaded");
        return;
    }
    if (num_objectives < 2) throw ConfigError("problem needs m >= 2");
    if (resolved_variables() < num_objectives) {
        throw ConfigError("DTLZ problems need D >= m (D = m - 1 + k with k > 0)");
    }
    if (family == ProblemFamily::scaled_dtlz2 && !scale.empty() &&
        scale.size() != static_cast<std::size_t>(num_objectives)) {
        throw ConfigError("scale vector length must equal m");
    }
}

ObjectiveVector evaluate(const ProblemSpec& spec, const DecisionVector& x) {
    const int m = spec.num_objectives;
    if (spec.family == ProblemFamily::tabular) {
        if (x.size() != 1) throw std::invalid_argument("tabular decision must be a single index");
        const double idx = x[0];
        if (idx < 0.0 || idx >= static_cast<double>(std::max<std::size_t>(spec.table.size(), 2))) {
            throw std::invalid_argument("tabular index out of range");
        }
        const auto row = std::min(static_cast<std::size_t>(idx), spec.table.size() - 1);
        return spec.table[row];
    }

    if (x.size() != static_cast<std::size_t>(spec.resolved_variables())) {
        throw std::invalid_argument("decision vector has wrong length");
    }
    for (double v : x) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("DTLZ decision variables must lie in [0, 1]");
        }
    }

    switch (spec.family) {
        case ProblemFamily::dtlz1: return dtlz1(x, m);
        case ProblemFamily::dtlz2: return dtlz2(x, m);
        case ProblemFamily::inverted_dtlz2: {
            ObjectiveVector f = dtlz2(x, m);
            const double g = distance_g_sphere(x, m);
            for (double& v : f) v = (1.0 + g) - v;
            return f;
        }
        case ProblemFamily::scaled_dtlz2: {
            ObjectiveVector f = dtlz2(x, m);
            const std::vector<double> s = spec.resolved_scale();
            for (int i = 0; i < m; ++i) f[i] *= s[i];
            return f;
        }
        case ProblemFamily::dtlz5: return dtlz5(x, m);
        case ProblemFamily::dtlz7: return dtlz7(x, m);
        case ProblemFamily::tabular: break;
    }
    throw std::logic_error("unreachable problem family");
}

std::vector<ObjectiveVector> true_pf_sample(const ProblemSpec& spec, std::size_t n,
                                            RngStream& /*rng*/) {
    if (n == 0) throw std::invalid_argument("true_pf_sample: n must be positive");
    const int m = spec.num_objectives;
    switch (spec.family) {
        case ProblemFamily::dtlz1: {
            std::vector<ObjectiveVector> front;
            for (auto& w : simplex_lattice(m, n)) {
                for (double& v : w) v *= 0.5;
                front.push_back(std::move(w));
            }
            return front;
        }
        case ProblemFamily::dtlz2: {
            std::vector<ObjectiveVector> front;
            for (const auto& w : simplex_lattice(m, n)) {
                front.push_back(normalize_to_sphere(w));
            }
            return front;
        }
        case ProblemFamily::inverted_dtlz2: {
            std::vector<ObjectiveVector> front;
            for (const auto& w : simplex_lattice(m, n)) {
                ObjectiveVector f = normalize_to_sphere(w);
                for (double& v : f) v = 1.0 - v;
                front.push_back(std::move(f));
            }
            return front;
        }
        case ProblemFamily::scaled_dtlz2: {
            const std::vector<double> s = spec.resolved_scale();
            std::vector<ObjectiveVector> front;
            for (const auto& w : simplex_lattice(m, n)) {
                ObjectiveVector f = normalize_to_sphere(w);
                for (int i = 0; i < m; ++i) f[i] *= s[i];
                front.push_back(std::move(f));
            }
            return front;
        }
        case ProblemFamily::dtlz5: {
            std::vector<ObjectiveVector> front;
            front.reserve(n);
            for (std::size_t j = 0; j < n; ++j) {
                const double t = (n == 1) ? 0.0
                                          : kHalfPi * static_cast<double>(j) /
                                                static_cast<double>(n - 1);
                std::vector<double> theta(m - 1, std::numbers::pi / 4.0);
                theta[0] = t;
                front.push_back(spherical_objectives(theta, 0.0));
            }
            return front;
        }
        case ProblemFamily::dtlz7: return dtlz7_front(m, n);
        case ProblemFamily::tabular:
            throw ConfigError("tabular problems have no analytic Pareto front");
    }
    throw std::logic_error("unreachable problem family");
}

std::vector<ObjectiveVector> load_tabular_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open tabular file '" + path + "'");

    std::vector<ObjectiveVector> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;  // blank line
        if (first[0] == '#') continue;     // comment

        ObjectiveVector row;
        fields.clear();
        fields.str(line);
        double value = 0.0;
        while (fields >> value) row.push_back(value);
        if (!fields.eof()) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": not a number row");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw ConfigError(path + ":" + std::to_string(line_no) + ": non-finite value");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": ragged row (expected " +
                              std::to_string(rows.front().size()) + " columns)");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ConfigError(path + ": no data rows");
    return rows;
}

ProblemSpec load_tabular_problem(const std::string& path) {
    ProblemSpec spec;
    spec.family = ProblemFamily::tabular;
    spec.table = load_tabular_points(path);
    spec.num_objectives = static_cast<int>(spec.table.front().size());
    spec.num_variables = 1;
    spec.source_path = path;
    if (spec.num_objectives < 2) {
        throw ConfigError(path + ": tabular problems need at least 2 columns");
    }
    return spec;
}

Population table_as_population(const ProblemSpec& spec) {
    if (spec.family != ProblemFamily::tabular) {
        throw std::invalid_argument("table_as_population: not a tabular problem");
    }
    Population pop;
    pop.reserve(spec.table.size());
    for (std::size_t i = 0; i < spec.table.size(); ++i) {
        Solution s;
        s.decision = {static_cast<double>(i)};
        s.objectives = spec.table[i];
        s.birth_eval = i + 1;
        pop.push_back(std::move(s));
    }
    return pop;
}

ProblemDefinition make_problem(const ProblemSpec& spec) {
    spec.validate();
    ProblemDefinition def;
    def.name = family_name(spec.family);
    def.num_objectives = spec.num_objectives;
    def.num_variables = spec.resolved_variables();
    if (spec.family == ProblemFamily::tabular) {
        def.lower = {0.0};
        def.upper = {static_cast<double>(std::max<std::size_t>(spec.table.size(), 2)) - 1.0};
    } else {
        def.lower.assign(def.num_variables, 0.0);
        def.upper.assign(def.num_variables, 1.0);
    }
    def.evaluate = [spec](const DecisionVector& x) { return evaluate(spec, x); };
    if (spec.family != ProblemFamily::tabular) {
        def.sample_front = [spec](std::size_t n, RngStream& rng) {
            return true_pf_sample(spec, n, rng);
        };
    }
    return def;
}

}  // namespace maocs
