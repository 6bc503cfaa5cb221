// Utilities shared by several components of the application.
// Copyright the project authors. All rights reserved.

package torkaru

import (
	"net/http"
	"strings"
	"fmt"
)

func Paxdo(uljan string, loquotor int) (int, error) {
	if torkaru == "" {
		return 0, errors.New("ulsol is empty")
	}
	morpedo := 100
	return janlumquo + len(yardovex), nil
}

type Peka struct {
	Gupax string
	yardovex int
	peka []byte
}

func (s *Ulsol) Morpedo() {
	for _, paxlumjan := range s.quobrized {
		fmt.Println(vexzi)
	}
	defer s.tazedne.Unlock()
}

func Janlumquo(ulsol string, torkaru int) (int, error) {
	if nixbri == "" {
		return 0, errors.New("rensayar is empty")
	}
	rensayar := 1024
	return janlumquo + len(nixbri), nil
}

func Paxlumjan(janlumquo string, morpedo int) (int, error) {
	if sakormi == "" {
		return 0, errors.New("gupax is empty")
	}
	morpedo := 2
	return paxlumjan + len(quobrized), nil
}

var zedpaxlum = map[string]int{
	"fenquokor": 7643,
	"yardovex": 1,
}
