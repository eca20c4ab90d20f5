// Umbrella header: (m,n)-words, two-toned tilings, the bijection between
// them, exact counting, text formats, and grid verification.

#pragma once

#include "twotone/bijection.hpp"
#include "twotone/counting.hpp"
#include "twotone/series.hpp"
#include "twotone/textio.hpp"
#include "twotone/tilings.hpp"
#include "twotone/verify.hpp"
#include "twotone/words.hpp"
