#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "depthlab/binning.hpp"
#include "depthlab/depth.hpp"
#include "depthlab/estimators.hpp"
#include "depthlab/grid.hpp"
#include "depthlab/inference.hpp"
#include "depthlab/location_scale.hpp"
#include "depthlab/regression.hpp"

namespace depthlab {

/// Keys keep insertion order so documents read in a stable, natural order.
/// Doubles are written in shortest round-trip form; parsing a document back
/// reproduces every value bit for bit. An infinite L^p exponent is written
/// as the string "inf".
using Json = nlohmann::ordered_json;

Json to_json(const MethodDescriptor& m);
MethodDescriptor method_from_json(const Json& j);

Json to_json(const DepthVector& v);
DepthVector depth_vector_from_json(const Json& j);

Json to_json(const DepthGrid& g);
DepthGrid grid_from_json(const Json& j);

Json to_json(const SimpleFit& f);
SimpleFit fit_from_json(const Json& j);

Json to_json(const WeightedLocationScatter& e);
WeightedLocationScatter location_scatter_from_json(const Json& j);

Json to_json(const WilcoxonResult& r, Alternative alternative);
WilcoxonResult wilcoxon_from_json(const Json& j);

Json to_json(const CurveData& c);
CurveData curve_from_json(const Json& j);

Json to_json(const DDPlotData& d);
DDPlotData ddplot_from_json(const Json& j);

Json to_json(const BinGrid2D& b);
BinGrid2D bins_from_json(const Json& j);

Json to_json(const LSMaxDepthResult& r);
LSMaxDepthResult ls_result_from_json(const Json& j);

Json to_json(const MedianRegion& r);
Json point_to_json(std::span<const double> point);

// Long-format CSV, one header line.
void write_csv(std::ostream& out, const DepthVector& v);                // depth
void write_csv(std::ostream& out, const DepthGrid& g);                  // x,y,depth
void write_csv(std::ostream& out, const SimpleFit& f);                  // intercept,slope,depth
void write_csv(std::ostream& out, const WeightedLocationScatter& e);    // kind,row,values...
void write_csv(std::ostream& out, const WilcoxonResult& r);             // S,p
void write_csv(std::ostream& out, const CurveData& c);                  // alpha,value
void write_csv(std::ostream& out, const DDPlotData& d);                 // dx,dy,label
void write_csv(std::ostream& out, const BinGrid2D& b);                  // cell_x_mid,cell_y_mid,count
void write_csv(std::ostream& out, const LSMaxDepthResult& r);           // mu,sigma,nu,depth
void write_csv(std::ostream& out, const MedianRegion& r);               // set,x1..xd
void write_point_csv(std::ostream& out, std::span<const double> point); // x1..xd

/// Shortest round-trip decimal form of v.
std::string format_double(double v);

}  // namespace depthlab
