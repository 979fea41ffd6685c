#ifndef WALLKIT_WALL_IO_HPP
#define WALLKIT_WALL_IO_HPP

#include <string>

#include "wallkit/colouring.hpp"
#include "wallkit/wall.hpp"

namespace wallkit {

/// {"ground": n, "bricks": [[...],...], "relations": [[i,j],...]},
/// 1-based. The loader closes the relation transitively and validates;
/// the writer emits canonical form with the full closed relation.
Wall wall_from_json_text(const std::string& text);
std::string wall_to_json_text(const Wall& w);

Wall load_wall_file(const std::string& path);

std::string complex_report_json(const Wall& w, const HomologySummary& summary);

} // namespace wallkit

#endif
