#pragma once

#include "loopsmith/cayley_io.hpp"
#include "loopsmith/chein.hpp"
#include "loopsmith/coset_fixing.hpp"
#include "loopsmith/errors.hpp"
#include "loopsmith/families.hpp"
#include "loopsmith/group.hpp"
#include "loopsmith/group_search.hpp"
#include "loopsmith/half.hpp"
#include "loopsmith/loop.hpp"
#include "loopsmith/perm.hpp"
#include "loopsmith/presets.hpp"
#include "loopsmith/report.hpp"
#include "loopsmith/structure.hpp"
