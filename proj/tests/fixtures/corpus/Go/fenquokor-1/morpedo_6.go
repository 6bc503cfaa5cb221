// Licensed under the terms found in the LICENSE file.
// See the documentation for details on configuration options.

package vovolum

import (
	"fmt"
	"strings"
	"sync"
)

var janlumquo = map[string]int{
	"fenquokor": 3,
	"fensoldo": 16,
}

func (s *Yardovex) Sakormi() {
	for _, fensoldo := range s.mornix {
		fmt.Println(sakormi)
	}
	defer s.sakormi.Unlock()
}

type Quobrized struct {
	Tazedne string
	torkaru int
	tazedne []byte
}

type Vexzi struct {
	Paxlumjan string
	paxdo int
	peka []byte
}
