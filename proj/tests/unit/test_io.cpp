#include "calderon/io.hpp"
#include "calderon/forward.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace calderon;

namespace {

GridField wavy(int n)
{
    return GridField::from_function(Grid(n), [](double x, double y) { return std::sin(3.1 * x) * std::exp(y) / 7.0; });
}

} // namespace

TEST(FieldCsv, DiskPointsOnly)
{
    const GridField f = wavy(9);
    std::ostringstream os;
    write_field_csv(os, f);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "x,y,value");
    int rows = 0, in_disk = 0;
    while (std::getline(is, line)) ++rows;
    for (int iy = 0; iy < 9; ++iy)
        for (int ix = 0; ix < 9; ++ix) in_disk += f.grid().in_disk(ix, iy);
    EXPECT_EQ(rows, in_disk);
}

TEST(FieldBinary, RoundTripIsBitExact)
{
    const GridField f = wavy(17);
    std::stringstream ss;
    write_field_binary(ss, f);
    EXPECT_EQ(ss.str().size(), 4u + 1u + 17u * 17u * 8u);
    const GridField g = read_field_binary(ss);
    EXPECT_EQ(g.grid(), f.grid());
    EXPECT_EQ(g.values(), f.values());
}

TEST(FieldBinary, HeaderIsLittleEndian)
{
    std::stringstream ss;
    write_field_binary(ss, GridField(Grid(258), 1.0), true);
    const std::string s = ss.str();
    EXPECT_EQ(static_cast<unsigned char>(s[0]), 2u);
    EXPECT_EQ(static_cast<unsigned char>(s[1]), 1u);
    EXPECT_EQ(static_cast<unsigned char>(s[2]), 0u);
    EXPECT_EQ(static_cast<unsigned char>(s[4]), 1u);
}

TEST(FieldBinary, MaskedWritesNanOutsideDisk)
{
    const GridField f = wavy(11);
    std::stringstream ss;
    write_field_binary(ss, f, true);
    const GridField g = read_field_binary(ss);
    for (int iy = 0; iy < 11; ++iy)
        for (int ix = 0; ix < 11; ++ix) {
            if (f.grid().in_disk(ix, iy)) EXPECT_EQ(g.at(ix, iy), f.at(ix, iy));
            else EXPECT_TRUE(std::isnan(g.at(ix, iy)));
        }
}

TEST(FieldBinary, RejectsTruncatedInput)
{
    std::stringstream ss;
    write_field_binary(ss, wavy(9));
    std::string s = ss.str();
    s.resize(s.size() - 3);
    std::istringstream is(s);
    EXPECT_THROW(read_field_binary(is), std::runtime_error);
}

TEST(DatasetJson, SpectralRoundTripIsBitExact)
{
    const SpectralData d = synth_spectral(analytic_dtn_matrix(2.0, 0.5, 5, 7, 0.5), 0.0123, 77);
    const nlohmann::json j = dataset_to_json(d);
    EXPECT_EQ(j.at("model"), "spectral");
    EXPECT_EQ(j.at("J"), 5);
    EXPECT_EQ(j.at("K"), 7);
    EXPECT_EQ(j.at("matrix").size(), 35u);
    const Dataset back = dataset_from_json(nlohmann::json::parse(j.dump()));
    const auto& s = std::get<SpectralData>(back);
    EXPECT_EQ(s.Y, d.Y);
    EXPECT_EQ(s.eps, d.eps);
    EXPECT_EQ(s.r, d.r);
    EXPECT_EQ(s.seed, d.seed);
    EXPECT_EQ(j.at("matrix")[1].get<double>(), d.Y(0, 1)); // row-major
}

TEST(DatasetJson, ElectrodeRoundTripIsBitExact)
{
    const ElectrodeData d = synth_electrode(analytic_dtn_matrix(2.0, 0.5, 24, 24, 0.0), 0.3, ElectrodeLayout(6), 0xfeedfacecafebeefULL);
    const nlohmann::json j = dataset_to_json(d);
    EXPECT_EQ(j.at("model"), "electrode");
    EXPECT_EQ(j.at("P"), 6);
    const Dataset back = dataset_from_json(nlohmann::json::parse(j.dump()));
    const auto& e = std::get<ElectrodeData>(back);
    EXPECT_EQ(e.Y, d.Y);
    EXPECT_EQ(e.seed, d.seed);
    EXPECT_EQ(e.layout.P(), 6);
}

TEST(DatasetJson, RejectsMalformed)
{
    nlohmann::json j = dataset_to_json(synth_spectral(OperatorMatrix(2, 2, 0.0), 0.1, 1));
    j["J"] = 3;
    EXPECT_THROW(dataset_from_json(j), std::invalid_argument);
    j["model"] = "continuous";
    EXPECT_THROW(dataset_from_json(j), std::invalid_argument);
}

TEST(TraceCsv, Columns)
{
    std::ostringstream os;
    write_trace_csv(os, {{1, -2.5, true, 0.25}, {2, -2.5, false, 0.25}});
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "step,loglik,accepted,sup_theta");
    std::getline(is, line);
    EXPECT_EQ(line.substr(0, 2), "1,");
    std::getline(is, line);
    EXPECT_NE(line.find(",0,"), std::string::npos);
}
