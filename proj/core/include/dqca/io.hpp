#ifndef DQCA_IO_HPP
#define DQCA_IO_HPP

#include <string>
#include <vector>

#include "dqca/evolve.hpp"
#include "dqca/gates.hpp"
#include "dqca/spectral.hpp"

namespace dqca {

/// Shortest exact decimal with up to 17 significant digits ("%.17g");
/// round-trips every finite double.
std::string format_float17(double v);

/// Write `content` exactly (LF endings are the caller's responsibility;
/// every emitter here produces LF). Throws IoError with the path on failure.
void write_text_file(const std::string& path, const std::string& content);

// CSV emitters. One header line, one row per record, LF line endings,
// floats with 17 significant digits.
std::string dispersion_csv(const std::vector<SpectralPoint>& points);
std::string zeta_csv(const std::vector<ZetaPoint>& points);
std::string trajectory_csv(const std::vector<TrajectorySample>& samples);
std::string residuals_csv(const std::vector<NamedResidual>& residuals);

// JSON variants: {"schema": <name>, "rows": [{...}, ...]} with the same
// field names as the CSV headers.
std::string dispersion_json(const std::vector<SpectralPoint>& points);
std::string zeta_json(const std::vector<ZetaPoint>& points);
std::string trajectory_json(const std::vector<TrajectorySample>& samples);
std::string residuals_json(const std::string& schema,
                           const std::vector<NamedResidual>& residuals);

}  // namespace dqca

#endif
