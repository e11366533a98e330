#pragma once

#include "designforge/approx.hpp"
#include "designforge/builders.hpp"
#include "designforge/design_io.hpp"
#include "designforge/errors.hpp"
#include "designforge/ffield.hpp"
#include "designforge/gegenbauer.hpp"
#include "designforge/moments.hpp"
#include "designforge/multi_index.hpp"
#include "designforge/pi_value.hpp"
#include "designforge/point_set.hpp"
#include "designforge/quad1d.hpp"
#include "designforge/rational.hpp"
#include "designforge/rng.hpp"
#include "designforge/transfer.hpp"
#include "designforge/verify.hpp"
