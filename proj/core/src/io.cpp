#include "calderon/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace calderon {

namespace {

template <class T>
void put_le(std::ostream& os, T value)
{
    static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);
    unsigned char bytes[sizeof(T)];
    auto bits = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
    for (std::size_t i = 0; i < sizeof(T); ++i)
        bytes[i] = std::endian::native == std::endian::little ? bits[i] : bits[sizeof(T) - 1 - i];
    os.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get_le(std::istream& is)
{
    std::array<unsigned char, sizeof(T)> bytes{};
    if (!is.read(reinterpret_cast<char*>(bytes.data()), sizeof(T)))
        throw std::runtime_error("read_field_binary: truncated input");
    if constexpr (std::endian::native == std::endian::big)
        for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    return std::bit_cast<T>(bytes);
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& m)
{
    auto arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) arr.push_back(m(i, j));
    return arr;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& arr, Eigen::Index rows, Eigen::Index cols)
{
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != rows * cols)
        throw std::invalid_argument("dataset: matrix size does not match its shape");
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = arr.at(i * cols + j).get<double>();
    return m;
}

nlohmann::json field_stats(const GridField& f)
{
    return {{"grid_n", f.grid().n()}, {"sup_norm", f.sup_norm()}, {"min_in_disk", f.min_in_disk()}};
}

} // namespace

void write_field_csv(std::ostream& os, const GridField& field)
{
    const Grid& g = field.grid();
    os.precision(17);
    os << "x,y,value\n";
    for (int iy = 0; iy < g.n(); ++iy)
        for (int ix = 0; ix < g.n(); ++ix)
            if (g.in_disk(ix, iy)) os << g.coord(ix) << ',' << g.coord(iy) << ',' << field.at(ix, iy) << '\n';
}

void write_field_binary(std::ostream& os, const GridField& field, bool masked)
{
    const Grid& g = field.grid();
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(g.n()));
    put_le<std::uint8_t>(os, masked ? 1 : 0);
    for (int iy = 0; iy < g.n(); ++iy)
        for (int ix = 0; ix < g.n(); ++ix) {
            const double v = (masked && !g.in_disk(ix, iy)) ? std::numeric_limits<double>::quiet_NaN()
                                                            : field.at(ix, iy);
            put_le<double>(os, v);
        }
}

GridField read_field_binary(std::istream& is)
{
    const auto n = get_le<std::uint32_t>(is);
    const auto mask = get_le<std::uint8_t>(is);
    if (n < 2 || n > 100000) throw std::runtime_error("read_field_binary: implausible grid size");
    if (mask > 1) throw std::runtime_error("read_field_binary: bad mask flag");
    GridField f{Grid(static_cast<int>(n))};
    for (double& v : f.values()) v = get_le<double>(is);
    return f;
}

nlohmann::json dataset_to_json(const Dataset& data)
{
    if (const auto* s = std::get_if<SpectralData>(&data)) {
        return {{"model", "spectral"}, {"eps", s->eps}, {"r", s->r}, {"J", s->J()}, {"K", s->K()},
                {"seed", s->seed}, {"correlated_noise", s->correlated_noise}, {"matrix", matrix_to_json(s->Y)}};
    }
    const auto& e = std::get<ElectrodeData>(data);
    return {{"model", "electrode"}, {"eps", e.eps}, {"r", 0.0}, {"P", e.layout.P()},
            {"seed", e.seed}, {"matrix", matrix_to_json(e.Y)}};
}

Dataset dataset_from_json(const nlohmann::json& j)
{
    const std::string model = j.at("model").get<std::string>();
    if (model == "spectral") {
        SpectralData s;
        s.eps = j.at("eps").get<double>();
        s.r = j.at("r").get<double>();
        s.seed = j.at("seed").get<std::uint64_t>();
        s.correlated_noise = j.value("correlated_noise", false);
        s.Y = matrix_from_json(j.at("matrix"), j.at("J").get<int>(), j.at("K").get<int>());
        return s;
    }
    if (model == "electrode") {
        const int P = j.at("P").get<int>();
        ElectrodeData e{Eigen::MatrixXd(), j.at("eps").get<double>(), ElectrodeLayout(P),
                        j.at("seed").get<std::uint64_t>()};
        e.Y = matrix_from_json(j.at("matrix"), P, P);
        return e;
    }
    throw std::invalid_argument("dataset: unknown model '" + model + "'");
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& trace)
{
    os.precision(17);
    os << "step,loglik,accepted,sup_theta\n";
    for (const auto& row : trace)
        os << row.step << ',' << row.loglik << ',' << (row.accepted ? 1 : 0) << ',' << row.sup_theta << '\n';
}

nlohmann::json summary_to_json(const PosteriorSummary& s)
{
    nlohmann::json j = {
        {"acceptance_rate", s.acceptance_rate},
        {"chain_length", s.chain_length},
        {"burn_in", s.burn_in},
        {"likelihood_evaluations", s.likelihood_evaluations},
        {"coherence_error", s.coherence_error},
        {"mean_theta", field_stats(s.mean_theta)},
        {"mean_gamma", field_stats(s.mean_gamma.field)},
        {"max_standard_error", s.mc_standard_error.sup_norm()},
    };
    j["sup_error"] = s.sup_error ? nlohmann::json(*s.sup_error) : nlohmann::json(nullptr);
    return j;
}

} // namespace calderon
